use ywall_core::{dominant, Weight, ALPHA_0, ALPHA_1, DELTA};

#[test]
fn simple_roots_and_delta() {
    assert_eq!(ALPHA_0, Weight::new(2, -1, 1));
    assert_eq!(ALPHA_1, Weight::new(-4, 2, 0));
    assert_eq!(DELTA, Weight::new(0, 0, 2));
    // The null root is 2α0 + α1.
    assert_eq!(2 * ALPHA_0 + ALPHA_1, DELTA);
}

#[test]
fn levels() {
    // level = ⟨c, λ⟩ with c = c0 + 2c1 in this basis.
    assert_eq!(Weight::new(1, 0, 0).level(), 1);
    assert_eq!(Weight::new(0, 1, 0).level(), 2);
    assert_eq!(DELTA.level(), 0);
    assert_eq!(ALPHA_0.level(), 0);
    assert_eq!(ALPHA_1.level(), 0);
}

#[test]
fn pairings_against_simple_coroots() {
    // Cartan matrix rows: ⟨h_i, α_j⟩.
    assert_eq!(ALPHA_0.pair(0), 2);
    assert_eq!(ALPHA_1.pair(0), -4);
    assert_eq!(ALPHA_0.pair(1), -1);
    assert_eq!(ALPHA_1.pair(1), 2);
    assert_eq!(DELTA.pair(0), 0);
    assert_eq!(DELTA.pair(1), 0);
}

#[test]
fn dominant_weights() {
    assert_eq!(dominant(4, 1).unwrap(), Weight::new(2, 1, 0));
    assert_eq!(dominant(1, 0).unwrap(), Weight::new(1, 0, 0));
    assert_eq!(dominant(2, 1).unwrap(), Weight::new(0, 1, 0));
    // 2a must not exceed the level, and a must be non-negative.
    assert!(dominant(1, 1).is_err());
    assert!(dominant(3, 2).is_err());
    assert!(dominant(4, -1).is_err());
}

#[test]
fn arithmetic() {
    let w = Weight::new(2, 1, 0);
    assert_eq!(w - ALPHA_0, Weight::new(0, 2, -1));
    assert_eq!(-w, Weight::new(-2, -1, 0));
    assert_eq!(3 * DELTA, Weight::new(0, 0, 6));
    assert_eq!(w + Weight::ZERO, w);
}

#[test]
fn display_roundtrip_through_serde() {
    let w = Weight::new(2, -1, 3);
    let json = serde_json::to_string(&w).unwrap();
    assert_eq!(json, r#"{"L0":2,"L1":-1,"half_delta":3}"#);
    assert_eq!(serde_json::from_str::<Weight>(&json).unwrap(), w);
}
