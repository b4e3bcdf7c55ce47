macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }

        #[test]
        fn $name() {
            $name::run().expect(concat!(stringify!($name), " example should run"));
        }
    };
}

example!(scalars);
example!(group_inverse);
example!(e_core);
example!(power_representation);
example!(idempotent_certificates);
example!(gram_formula);
example!(weighted_ep);
example!(weighted_mp);
example!(oracle_sweep);
