mod support;

macro_rules! property_tests {
    ($($name:ident),* $(,)?) => {
        $(
            #[test]
            fn $name() {
                support::$name().unwrap();
            }
        )*
    };
}

property_tests!(
    field_axioms,
    galois_is_a_ring_map,
    polynomial_ring_axioms,
    euler_relation,
    substitution_is_a_homomorphism,
    det_is_multiplicative,
    reduction_commutes_with_arithmetic,
);
