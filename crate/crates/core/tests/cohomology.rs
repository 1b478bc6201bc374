use bt_cohomology::cohomology::{
    closed_formula, coxeter_cohomology, coxeter_eigendim, coxeter_label, r_term, r_term_explicit,
    spectral_first_page, stratum_cohomology, verify_coxeter, verify_stratum, CohomologyTable,
    FrobEigen, VarietyKind,
};
use bt_cohomology::poly::Polynomial;
use bt_cohomology::unipotent::degree_u;
use bt_cohomology::IntPolynomial;
use num_bigint::BigInt;

fn unitary_order_prime_to_q(n: usize) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::one(), |acc, i| {
        let sign = if i % 2 == 0 { -1 } else { 1 };
        &acc * &Polynomial::binomial(i, BigInt::from(sign))
    })
}

#[test]
fn stratum_equals_closed_formula() {
    for theta in 0..=8 {
        let h = stratum_cohomology(theta).unwrap();
        let c = closed_formula(theta);
        assert!(
            h.same_entries(&c),
            "theta={theta}: {:?}",
            h.first_difference(&c)
        );
        assert_eq!(h.support(), Some((0, 2 * theta)));
        assert!(h.is_multiplicity_free());
        for (d, e, _) in h.iter() {
            assert_eq!(e.exponent, d);
        }
        for i in 0..=2 * theta {
            assert_eq!(h.in_degree(i).unwrap(), h.in_degree(2 * theta - i).unwrap());
        }
    }
}

#[test]
fn eigendim_is_the_hook_formula() {
    for k in 0..=8 {
        for a in 0..=2 * k {
            let lhs = coxeter_eigendim::<BigInt>(k, a).unwrap();
            let rhs = degree_u::<BigInt>(&coxeter_label(k, a).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "k={k} a={a}");
        }
    }
}

#[test]
fn coxeter_euler_characteristic_is_the_torus_index() {
    // Σ (-1)^i dim H_c^i(X(cox)) = ±|U_{2k+1}|_{q'} / |T_cox|, |T_cox| = q^{2k+1} + 1.
    for k in 0..=7 {
        let chi = coxeter_cohomology(k)
            .euler_characteristic::<BigInt>()
            .unwrap();
        let torus = Polynomial::binomial(2 * k + 1, BigInt::from(1));
        let index = unitary_order_prime_to_q(2 * k + 1)
            .div_exact(&torus)
            .unwrap();
        let expected = if k % 2 == 0 { index } else { -index };
        assert_eq!(chi, expected, "k={k}");
    }
}

#[test]
fn pieri_path_equals_enumeration() {
    for theta in 0..=6 {
        for theta_prime in 0..=theta {
            for a in 0..=2 * theta_prime {
                let r = r_term(theta, theta_prime, a).unwrap();
                assert_eq!(r, r_term_explicit(theta, theta_prime, a).unwrap());
                assert!(r.is_multiplicity_free());
                assert_eq!(r.rank(), Some(2 * theta + 1));
            }
        }
    }
}

#[test]
fn first_page_shape() {
    for theta in 0..=6 {
        let page = spectral_first_page(theta);
        // Column θ' occupies degrees θ'..=2θ'.
        assert_eq!(page.populated(), (0..=theta).map(|c| c + 1).sum::<usize>());
        for c in 0..=theta {
            for d in c..=2 * c {
                let cell = page.cell(c, d).unwrap();
                let expected: Vec<usize> = if d < 2 * c {
                    vec![2 * (d - c), 2 * (d - c) + 1]
                } else {
                    vec![2 * c]
                };
                let got: Vec<usize> = cell.keys().map(|e| e.exponent).collect();
                assert_eq!(got, expected, "theta={theta} column {c} degree {d}");
            }
        }
    }
}

#[test]
fn verification_passes() {
    for theta in 0..=6 {
        let report = verify_stratum(theta);
        assert!(
            report.passed(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
    }
    for k in 0..=6 {
        let report = verify_coxeter(k);
        assert!(
            report.passed(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
    }
}

#[test]
fn trivial_rep_in_degree_zero_and_top() {
    for theta in 0..=8 {
        let h = stratum_cohomology(theta).unwrap();
        for d in [0, 2 * theta] {
            let parts: Vec<_> = h
                .in_degree(d)
                .unwrap()
                .labels()
                .map(|l| l.to_partition())
                .filter(|p| p.len() == 1)
                .collect();
            assert_eq!(parts.len(), 1);
        }
        assert_eq!(h.in_degree(0).unwrap().len(), 1);
    }
}

#[test]
fn tables_round_trip_through_json() {
    for theta in 0..=4 {
        let h = stratum_cohomology(theta).unwrap();
        let text = serde_json::to_string(&h).unwrap();
        let back: CohomologyTable = serde_json::from_str(&text).unwrap();
        assert_eq!(back, h);
    }
    for k in 0..=4 {
        let h = coxeter_cohomology(k);
        let back: CohomologyTable =
            serde_json::from_value(serde_json::to_value(&h).unwrap()).unwrap();
        assert_eq!(back, h);
        assert_eq!(back.variety, VarietyKind::Coxeter { k });
    }
    let bad = serde_json::json!({
        "variety": {"kind": "closed_stratum", "theta": 1},
        "entries": [{"degree": 0, "frobenius_exponent": 0, "constituents": [
            {"partition": [3], "symbol": {"t": 1, "alpha": [], "beta": [1]}, "degree_poly": ["1"]}
        ]}]
    });
    assert!(serde_json::from_value::<CohomologyTable>(bad).is_err());
}

#[test]
fn tate_twist_shifts_by_two() {
    assert_eq!(FrobEigen::new(3).tate_twist(1), FrobEigen::new(5));
    assert_eq!(FrobEigen::new(0).tate_twist(0), FrobEigen::new(0));
}

mod faults {
    use bt_cohomology::cohomology::{verify_coxeter_with, verify_stratum_with, Kernels};
    use bt_cohomology::harish_chandra::{pieri_induce, BipartitionMultiset, CharacterKernels};
    use bt_cohomology::partitions::{Bipartition, Partition};
    use bt_cohomology::weyl::{chi_sym, chi_typeb, SymClass, TypeBClass};
    use bt_cohomology::Result;
    use num_bigint::BigInt;

    fn drops_a_constituent(b: &Bipartition, s: usize) -> BipartitionMultiset {
        let mut m = pieri_induce(b, s);
        if let Some(k) = m.keys().last().cloned() {
            m.remove(&k);
        }
        m
    }

    fn wrong_typeb_sign(label: &Bipartition, class: &TypeBClass) -> Result<BigInt> {
        let v: BigInt = chi_typeb(label, class)?;
        // A sign flip on every class with one negative cycle would cancel
        // inside the reciprocity sum, so only the single long negative cycle.
        let long_negative = class.0.first.is_empty() && class.0.second.len() == 1;
        Ok(if long_negative && class.0.size() >= 2 {
            -v
        } else {
            v
        })
    }

    fn wrong_sym_value(label: &Partition, class: &SymClass) -> Result<BigInt> {
        let v: BigInt = chi_sym(label, class)?;
        Ok(if class.0.len() == 1 && class.0.size() >= 2 {
            v - 1
        } else {
            v
        })
    }

    fn any_stratum_fails(kernels: &Kernels) -> bool {
        (0..=6).any(|theta| !verify_stratum_with(theta, kernels).passed())
    }

    #[test]
    fn broken_pieri_fails_verification() {
        let kernels = Kernels {
            pieri_induce: drops_a_constituent,
            ..Kernels::default()
        };
        assert!(any_stratum_fails(&kernels));
    }

    #[test]
    fn broken_type_b_recursion_fails_verification() {
        let kernels = Kernels {
            characters: CharacterKernels {
                chi_typeb: wrong_typeb_sign,
                ..CharacterKernels::default()
            },
            ..Kernels::default()
        };
        assert!(any_stratum_fails(&kernels));
    }

    #[test]
    fn broken_type_a_recursion_fails_verification() {
        let kernels = Kernels {
            characters: CharacterKernels {
                chi_sym: wrong_sym_value,
                ..CharacterKernels::default()
            },
            ..Kernels::default()
        };
        assert!(any_stratum_fails(&kernels));
    }

    #[test]
    fn broken_restriction_fails_coxeter_check() {
        fn nothing(_: &Bipartition, _: usize) -> Result<BipartitionMultiset> {
            Ok(BipartitionMultiset::new())
        }
        let kernels = Kernels {
            pieri_restrict: nothing,
            ..Kernels::default()
        };
        assert!((1..=3).all(|k| !verify_coxeter_with(k, &kernels).passed()));
    }

    #[test]
    fn default_kernels_pass() {
        assert!(!any_stratum_fails(&Kernels::default()));
    }
}
