use einl::exactalg::{Field, LinearSystem, Matrix, PrimeField, QMatrix, Rational, Rationals, Subspace};
use proptest::prelude::*;

fn rational_matrix() -> impl Strategy<Value = QMatrix> {
    (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec((-3i64..4, 1i64..4), r * c).prop_map(move |entries| {
            let data = entries
                .into_iter()
                .map(|(n, d)| Rational::new(n.into(), d.into()))
                .collect();
            Matrix::from_vec(Rationals, r, c, data).unwrap()
        })
    })
}

fn f3_matrix() -> impl Strategy<Value = Matrix<PrimeField>> {
    (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec(0u32..3, r * c)
            .prop_map(move |data| Matrix::from_vec(PrimeField::new(3).unwrap(), r, c, data).unwrap())
    })
}

fn rank_nullity<F: Field>(m: &Matrix<F>) -> Result<(), TestCaseError> {
    let kernel = m.kernel();
    prop_assert_eq!(m.rank() + kernel.dim(), m.cols());
    for v in kernel.basis_vectors() {
        prop_assert!(m.mul_vec(&v).unwrap().iter().all(|x| m.field().is_zero(x)));
    }
    Ok(())
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in rational_matrix()) {
        let once = m.rref().reduced;
        prop_assert_eq!(once.rref().reduced, once);
    }

    #[test]
    fn rref_is_idempotent_mod_3(m in f3_matrix()) {
        let once = m.rref().reduced;
        prop_assert_eq!(once.rref().reduced, once);
    }

    #[test]
    fn rank_plus_nullity(m in rational_matrix()) {
        rank_nullity(&m)?;
    }

    #[test]
    fn rank_plus_nullity_mod_3(m in f3_matrix()) {
        rank_nullity(&m)?;
    }

    #[test]
    fn canonical_form_is_unique(m in rational_matrix(), k in -2i64..3) {
        // a second spanning set: rows reversed, plus row 0 + k·row 1, plus a duplicate
        let rows = m.row_vecs();
        let q = Rationals;
        let mut other: Vec<_> = rows.iter().rev().cloned().collect();
        if rows.len() > 1 {
            let mixed = rows[0].iter().zip(&rows[1]).map(|(a, b)| q.add(a, &q.mul(&q.from_i64(k), b))).collect();
            other.push(mixed);
        }
        other.push(rows[0].clone());
        let a = Subspace::span(q, m.cols(), &rows).unwrap();
        let b = Subspace::span(q, m.cols(), &other).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn sum_and_intersection_dimensions(a in rational_matrix(), b in rational_matrix()) {
        prop_assume!(a.cols() == b.cols());
        let u = Subspace::from_spanning_matrix(&a).unwrap();
        let w = Subspace::from_spanning_matrix(&b).unwrap();
        let sum = u.sum(&w).unwrap();
        let meet = u.intersection(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(u.contains_subspace(&meet).unwrap() && w.contains_subspace(&meet).unwrap());
    }

    #[test]
    fn sparse_system_matches_dense_kernel(m in rational_matrix()) {
        let mut system = LinearSystem::new(Rationals, m.cols());
        for row in m.row_vecs() {
            let terms: Vec<_> = row.into_iter().enumerate().filter(|(_, x)| *x != Rational::from_integer(0.into())).collect();
            system.push(&terms).unwrap();
        }
        prop_assert_eq!(system.solutions(), m.kernel());
        prop_assert_eq!(system.rank(), m.rank());
    }
}

#[test]
fn small_prime_fields_exhaustively() {
    for p in [2u32, 3] {
        let f = PrimeField::new(p).unwrap();
        for x in f.elements() {
            assert_eq!(f.pow(x, p as u64), x, "Fermat in F_{p}");
            if x != 0 {
                let inv = f.inv(&x).expect("nonzero is invertible");
                assert!(f.is_one(&f.mul(&x, &inv)));
            } else {
                assert!(f.inv(&x).is_none());
            }
        }
    }
    assert!(PrimeField::new(4).is_err());
}
