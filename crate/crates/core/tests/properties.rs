use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use nree8_core::exact::{hnf, hnf_basis, int_det, kernel, snf, IntMatrix, RatMatrix};
use nree8_core::lattice::Lattice;
use nree8_core::shortvec;

fn matrix(rows: usize, cols: usize, range: i64) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(proptest::collection::vec(-range..=range, cols), rows)
        .prop_map(move |r| IntMatrix::from_rows(cols, &r))
}

fn any_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c, 6))
}

/// Products of elementary row operations.
fn unimodular(k: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec((0..k, 0..k, -3i64..=3, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut u: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
        for (a, b, c, neg) in ops {
            if a == b {
                if neg {
                    u[a].iter_mut().for_each(|v| *v = -*v);
                }
            } else {
                let rb = u[b].clone();
                u[a].iter_mut().zip(rb).for_each(|(x, y)| *x += c * y);
            }
        }
        IntMatrix::from_rows(k, &u)
    })
}

fn full_rank_lattice(max: usize) -> impl Strategy<Value = Lattice> {
    (1usize..=max)
        .prop_flat_map(|n| matrix(n, n, 4))
        .prop_filter_map("singular", |b| {
            Lattice::new(b.cols(), BigRational::one(), b).ok()
        })
}

fn sublattice_of_zn(n: usize) -> impl Strategy<Value = Lattice> {
    (1usize..=n)
        .prop_flat_map(move |k| matrix(k, n, 3))
        .prop_filter_map("dependent", move |b| {
            Lattice::new(n, BigRational::one(), b).ok()
        })
}

fn diag(rows: usize, cols: usize, entries: &[BigInt]) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows, cols);
    for (i, e) in entries.iter().enumerate() {
        m.row_mut(i)[i] = e.clone();
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_a_unimodular_transform(m in any_matrix()) {
        let (h, u) = hnf(&m);
        prop_assert_eq!(u.mul(&m), h);
        prop_assert!(int_det(&u).abs().is_one());
    }

    #[test]
    fn hnf_basis_is_invariant_under_rebasing(
        (m, u) in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| (matrix(r, c, 5), unimodular(r)))
    ) {
        prop_assert_eq!(hnf_basis(&u.mul(&m)), hnf_basis(&m));
    }

    #[test]
    fn snf_round_trip_and_chain(m in any_matrix()) {
        let (s, u, v) = snf(&m);
        prop_assert!(s.is_chain());
        prop_assert_eq!(u.mul(&m).mul(&v), diag(m.rows(), m.cols(), s.entries()));
        prop_assert!(int_det(&u).abs().is_one());
        prop_assert!(int_det(&v).abs().is_one());
    }

    #[test]
    fn det_is_product_of_smith_entries(m in (1usize..=4).prop_flat_map(|n| matrix(n, n, 5))) {
        let (s, _, _) = snf(&m);
        let d = int_det(&m);
        let prod: BigInt = s.entries().iter().product();
        prop_assert_eq!(d.abs(), prod);
    }

    #[test]
    fn kernel_is_annihilated(m in any_matrix()) {
        let k = kernel(&m.to_rat());
        prop_assert!(k.mul(&m).is_zero());
        prop_assert_eq!(k.rows() + m.to_rat().rank(), m.rows());
    }

    #[test]
    fn text_format_round_trip(m in any_matrix(), den in 1i64..6) {
        let r = RatMatrix::new(m, den.into());
        prop_assert_eq!(RatMatrix::parse(&r.to_text()).unwrap(), r);
    }

    #[test]
    fn dual_of_dual(l in full_rank_lattice(4)) {
        // each dual multiplies coordinates by k and the scale by k^2
        let dd = l.dual().unwrap().dual().unwrap();
        let factor = (dd.scale() / l.scale()).to_integer();
        prop_assert!(dd.same_lattice(&l.lift_scale(&factor)));
    }

    #[test]
    fn sum_and_intersection(a in sublattice_of_zn(4), b in sublattice_of_zn(4)) {
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert!(s.contains(&a) && s.contains(&b));
        prop_assert!(a.contains(&i) && b.contains(&i));
        prop_assert_eq!(s.rank() + i.rank(), a.rank() + b.rank());
    }

    #[test]
    fn annihilator_is_orthogonal_and_complementary(s in sublattice_of_zn(4)) {
        let l = Lattice::standard(4);
        let a = l.annihilator(&s).unwrap();
        for x in a.basis().row_vecs() {
            for y in s.basis().row_vecs() {
                prop_assert!(l.inner(&x, &y).is_zero());
            }
        }
        prop_assert_eq!(a.rank() + s.rank(), 4);
    }

    #[test]
    fn rescale_scales_det(l in full_rank_lattice(3), c in 1i64..4) {
        let c = BigRational::from_integer(c.into());
        let r = l.rescale(&c).unwrap();
        prop_assert_eq!(r.det(), l.det() * num_traits::pow(c, l.rank()));
    }

    #[test]
    fn enumeration_matches_box_search(l in full_rank_lattice(3), bound in 1i64..10) {
        let got = shortvec::enumerate_up_to(&l, &BigRational::from_integer(bound.into())).unwrap();
        let g = l.gram().to_int().unwrap().to_i64_rows();
        let k = g.len();
        // the box radius sqrt(bound * (G^-1)_ii) from the exact inverse
        let inv = l.gram().inverse().unwrap();
        let radius: Vec<i64> = (0..k)
            .map(|i| {
                let v = inv.get(i, i) * BigRational::from_integer(bound.into());
                let mut r = 0i64;
                while BigRational::from_integer(((r + 1) * (r + 1)).into()) <= v {
                    r += 1;
                }
                r
            })
            .collect();
        let mut want = Vec::new();
        let mut x: Vec<i64> = radius.iter().map(|r| -r).collect();
        'outer: loop {
            let norm: i64 = (0..k).map(|i| (0..k).map(|j| x[i] * g[i][j] * x[j]).sum::<i64>()).sum();
            if x.iter().find(|&&v| v != 0).is_some_and(|&v| v > 0) && norm <= bound {
                want.push(x.clone());
            }
            for i in 0..k {
                x[i] += 1;
                if x[i] <= radius[i] {
                    continue 'outer;
                }
                x[i] = -radius[i];
            }
            break;
        }
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn index_matches_determinant_ratio(l in full_rank_lattice(3), c in 2i64..4) {
        let sub = Lattice::new(
            l.ambient_dim(),
            l.scale().clone(),
            l.basis().scaled(&c.into()),
        ).unwrap();
        let idx = sub.index_in(&l).unwrap();
        prop_assert_eq!(idx, num_traits::pow(BigInt::from(c), l.rank()));
        prop_assert!(sub.contains_double_of(&l) == (c == 2));
    }
}
