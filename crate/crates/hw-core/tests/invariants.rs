//! Property tests quantifying the library's structural identities over
//! randomized inputs: Serre duality on lattices, twist inversion, radical
//! projections, Euler-form consistency, reflection involution, Hom
//! additivity, tube periodicity, and JSON round-trips.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use hw_core::classify::CategoryDescriptor;
use hw_core::exact::{Int, IntMatrix};
use hw_core::json;
use hw_core::klattice::{curve_lattice, twist_k, twist_k_checked, EulerLattice, TwistDirection, TwistMode};
use hw_core::quiver::{hom_ext, reflect, Quiver, QuiverError, Rep};
use hw_core::tube::{realize, tau, tube_hom, tube_lattice, TubeObject};
use hw_core::verify::{random_acyclic_quiver, random_rep};

fn int(x: i64) -> Int {
    Int::from(x)
}

fn ints(xs: &[i64]) -> Vec<Int> {
    xs.iter().map(|&x| int(x)).collect()
}

/// Random acyclic quiver: vertices 2..=5, any subset of the forward arrows
/// i → j with i < j (acyclic by construction), parallel arrows allowed.
fn arb_acyclic_quiver() -> impl Strategy<Value = Quiver> {
    (2usize..=5).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let len = pairs.len();
        proptest::collection::vec(0usize..=2, len).prop_map(move |mult| {
            let mut arrows = Vec::new();
            for (k, &(s, t)) in pairs.iter().enumerate() {
                for _ in 0..mult[k] {
                    arrows.push((s, t));
                }
            }
            Quiver::new(n, arrows).expect("indices in range by construction")
        })
    })
}

fn arb_lattice_case() -> impl Strategy<Value = (Quiver, Vec<i64>, Vec<i64>)> {
    arb_acyclic_quiver().prop_flat_map(|q| {
        let n = q.vertex_count();
        (
            Just(q),
            proptest::collection::vec(-20i64..=20, n),
            proptest::collection::vec(-20i64..=20, n),
        )
    })
}

proptest! {
    /// χ(v,w) + χ(w, C·v) = 0 on every lattice with an integral Coxeter
    /// matrix, extended bilinearly from basis pairs to random vectors.
    #[test]
    fn serre_identity_bilinear((q, vraw, wraw) in arb_lattice_case()) {
        let lat = EulerLattice::new(q.ringel_form()).unwrap();
        let check = lat.serre_check();
        prop_assert!(check.holds, "Ringel forms always carry Serre duality");
        let c = check.coxeter.unwrap();
        let (v, w) = (ints(&vraw), ints(&wraw));
        let lhs = lat.euler_form(&v, &w).unwrap();
        let rhs = lat.euler_form(&w, &c.mul_vec(&v)).unwrap();
        prop_assert_eq!(lhs, -rhs);
    }

    /// The same identity on curve lattices of every small genus.
    #[test]
    fn serre_identity_on_curves(g in 0i64..=6, vraw in proptest::array::uniform2(-30i64..=30), wraw in proptest::array::uniform2(-30i64..=30)) {
        let lat = curve_lattice(g);
        let c = lat.coxeter().unwrap();
        let (v, w) = (ints(&vraw), ints(&wraw));
        let lhs = lat.euler_form(&v, &w).unwrap();
        let rhs = lat.euler_form(&w, &c.mul_vec(&v)).unwrap();
        prop_assert_eq!(lhs, -rhs);
    }

    /// Left and right twists along the point class are mutually inverse on
    /// curve lattices of every genus.
    #[test]
    fn twist_round_trip_on_curves(g in 0i64..=6, vraw in proptest::array::uniform2(-30i64..=30)) {
        let lat = curve_lattice(g);
        let s = vec![ints(&[1, 0])];
        let v = ints(&vraw);
        let left = twist_k_checked(&lat, &s, &v, TwistDirection::Left, TwistMode::Spherical).unwrap();
        let back = twist_k_checked(&lat, &s, &left, TwistDirection::Right, TwistMode::Spherical).unwrap();
        prop_assert_eq!(&back, &v);
        let right = twist_k(&lat, &s, &v, TwistDirection::Right).unwrap();
        let fwd = twist_k(&lat, &s, &right, TwistDirection::Left).unwrap();
        prop_assert_eq!(&fwd, &v);
    }

    /// Quotient compatibility: for any v and any w with zero radical
    /// component, χ_parent(v, w) = χ_induced(project v, project w).
    #[test]
    fn radical_quotient_form_agreement(r in 2usize..=4, vraw in proptest::collection::vec(-9i64..=9, 4), qraw in proptest::collection::vec(-9i64..=9, 4)) {
        let lat = tube_lattice(r).unwrap();
        let num = lat.radical_quotient().unwrap();
        let v = ints(&vraw[..r]);
        let qw = ints(&qraw[..num.num_rank()]);
        let w = num.lift(&qw).unwrap();
        let parent = lat.euler_form(&v, &w).unwrap();
        let induced = num.as_lattice().euler_form(&num.project(&v).unwrap(), &qw).unwrap();
        prop_assert_eq!(parent, induced);
    }

    /// dim Hom − dim Ext¹ equals the Ringel form on random representation
    /// pairs over random acyclic quivers.
    #[test]
    fn euler_form_matches_hom_ext(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_acyclic_quiver(&mut rng);
        let m = random_rep(&mut rng, &q);
        let n = random_rep(&mut rng, &q);
        let he = hom_ext(&m, &n).unwrap();
        let lat = EulerLattice::new(q.ringel_form()).unwrap();
        let chi = lat.euler_form(&m.dims_int(), &n.dims_int()).unwrap();
        prop_assert_eq!(int(he.hom_dim as i64 - he.ext_dim as i64), chi);
    }

    /// Reflecting twice at the same sink/source restores the quiver, the
    /// dimension vector, and the Hom/Ext profile against every simple.
    #[test]
    fn reflection_involution(seed in any::<u64>(), n in 2usize..=4, at_sink in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = Quiver::linear(n);
        let m = random_rep(&mut rng, &q);
        let v = if at_sink { n - 1 } else { 0 };
        match reflect(&q, &m, v) {
            // A summand equal to the simple at v: the reflection functor is
            // undefined there, nothing to check.
            Err(QuiverError::SimpleSummandAtVertex(_)) => {}
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error: {e}"))),
            Ok((rq, r1)) => {
                let (rq2, r2) = reflect(&rq, &r1, v).unwrap();
                prop_assert_eq!(&rq2, &q);
                prop_assert_eq!(r2.dims(), m.dims());
                for s in 0..n {
                    let simple = Rep::simple(q.clone(), s).unwrap();
                    let a = hom_ext(&m, &simple).unwrap();
                    let b = hom_ext(&r2, &simple).unwrap();
                    prop_assert_eq!((a.hom_dim, a.ext_dim), (b.hom_dim, b.ext_dim));
                }
            }
        }
    }

    /// Hom and Ext¹ are additive in the second argument.
    #[test]
    fn hom_ext_additive_in_direct_sums(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_acyclic_quiver(&mut rng);
        let m = random_rep(&mut rng, &q);
        let n1 = random_rep(&mut rng, &q);
        let n2 = random_rep(&mut rng, &q);
        let sum = n1.direct_sum(&n2).unwrap();
        let whole = hom_ext(&m, &sum).unwrap();
        let a = hom_ext(&m, &n1).unwrap();
        let b = hom_ext(&m, &n2).unwrap();
        prop_assert_eq!(whole.hom_dim, a.hom_dim + b.hom_dim);
        prop_assert_eq!(whole.ext_dim, a.ext_dim + b.ext_dim);
    }

    /// Emitted representation JSON re-parses to an equal value, rational
    /// entries included.
    #[test]
    fn json_rep_round_trip(nums in proptest::collection::vec(-12i64..=12, 4), dens in proptest::collection::vec(1i64..=4, 4)) {
        let q = Quiver::linear(3);
        let entries: Vec<hw_core::Rat> = nums
            .iter()
            .zip(&dens)
            .map(|(&p, &d)| hw_core::Rat::new(int(p), int(d)))
            .collect();
        let maps = vec![
            hw_core::RatMatrix::from_fn(2, 1, |i, _| entries[i].clone()),
            hw_core::RatMatrix::from_fn(1, 2, |_, j| entries[2 + j].clone()),
        ];
        let rep = Rep::new(q.clone(), vec![1, 2, 1], maps).unwrap();
        let text = json::rep_value(&rep).to_string();
        let parsed = json::parse_rep(&serde_json::from_str::<Value>(&text).unwrap(), &q).unwrap();
        prop_assert_eq!(parsed, rep);
    }

    /// Emitted lattice JSON (labels included) re-parses to an equal value.
    #[test]
    fn json_lattice_round_trip(entries in proptest::collection::vec(-9i64..=9, 9), label_suffixes in proptest::collection::vec("[a-z]{1,6}", 3)) {
        let gram = IntMatrix::from_fn(3, 3, |i, j| int(entries[3 * i + j]));
        let labels: Vec<String> =
            label_suffixes.iter().enumerate().map(|(i, s)| format!("e{i}_{s}")).collect();
        let lat = EulerLattice::new(gram).unwrap().with_labels(labels).unwrap();
        let text = json::lattice_value(&lat).to_string();
        let parsed = json::parse_lattice(&serde_json::from_str::<Value>(&text).unwrap()).unwrap();
        prop_assert_eq!(parsed, lat);
    }

    /// Emitted quiver JSON re-parses to an equal value.
    #[test]
    fn json_quiver_round_trip(q in arb_acyclic_quiver()) {
        let text = json::quiver_value(&q).to_string();
        let parsed = json::parse_quiver(&serde_json::from_str::<Value>(&text).unwrap()).unwrap();
        prop_assert_eq!(parsed, q);
    }

    /// Emitted tube-object JSON re-parses to an equal value.
    #[test]
    fn json_tube_object_round_trip(r in 1usize..=6, base_raw in 0usize..=5, len in 1usize..=9) {
        let x = TubeObject::new(r, base_raw % r, len).unwrap();
        let text = json::tube_object_value(&x).to_string();
        let parsed =
            json::parse_tube_object(&serde_json::from_str::<Value>(&text).unwrap(), r).unwrap();
        prop_assert_eq!(parsed, x);
    }

    /// Emitted descriptor JSON re-parses to a descriptor that emits the same
    /// JSON, including one level of direct-sum nesting.
    #[test]
    fn json_descriptor_round_trip(r in 1usize..=4, g in 0i64..=4, n in 2usize..=4, wrap in any::<bool>()) {
        let leaf_a = CategoryDescriptor::TubeCat(r);
        let leaf_b = CategoryDescriptor::CurveCat(g);
        let leaf_c = CategoryDescriptor::QuiverCat(Quiver::linear(n));
        let d = if wrap {
            CategoryDescriptor::DirectSum(vec![leaf_a, leaf_b, leaf_c])
        } else {
            leaf_c
        };
        let value = json::descriptor_value(&d);
        let parsed = json::parse_descriptor(&value).unwrap();
        prop_assert_eq!(json::descriptor_value(&parsed), value);
    }
}

#[test]
fn tube_tau_has_period_rank() {
    for r in 1..=5usize {
        for base in 0..r {
            for len in 1..=6usize {
                let x = TubeObject::new(r, base, len).unwrap();
                let mut y = x;
                for _ in 0..r {
                    y = tau(&y);
                }
                assert_eq!(y, x, "tau^{r} must fix (base {base}, length {len})");
                if r > 1 {
                    assert_ne!(tau(&x), x, "tau must move objects in rank {r}");
                }
            }
        }
    }
}

#[test]
fn tube_classes_are_orthogonal_to_total_spherical_class() {
    for r in 1..=4usize {
        let lat = tube_lattice(r).unwrap();
        let total = vec![Int::from(1); r];
        for base in 0..r {
            for len in 1..=6usize {
                let x = TubeObject::new(r, base, len).unwrap();
                let chi = lat.euler_form(&x.class_vector(), &total).unwrap();
                assert_eq!(chi, Int::from(0), "rank {r}, base {base}, length {len}");
            }
        }
    }
}

#[test]
fn tube_class_additivity_and_euler_agreement() {
    for r in 1..=3usize {
        let lat = tube_lattice(r).unwrap();
        let mut objects = Vec::new();
        for base in 0..r {
            for len in 1..=6usize {
                objects.push(TubeObject::new(r, base, len).unwrap());
            }
        }
        for x in &objects {
            // The realized representation's dimension vector is the class.
            assert_eq!(realize(x).dims_int(), x.class_vector());
            for y in &objects {
                let (h, e) = tube_hom(x, y).unwrap();
                let chi = lat.euler_form(&x.class_vector(), &y.class_vector()).unwrap();
                assert_eq!(Int::from(h as i64 - e as i64), chi);
            }
        }
    }
}
