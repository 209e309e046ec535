use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
}

#[test]
fn gram_schmidt_identity_case() {
    let f = gram_schmidt(&[vec![1.0, 0.0], vec![1.0, 1.0]], DEPENDENCE_TOL).unwrap();
    assert!(close(&f.columns()[0], &[1.0, 0.0], 1e-15));
    assert!(close(&f.columns()[1], &[0.0, 1.0], 1e-15));
}

#[test]
fn gram_schmidt_normalizes() {
    let f = gram_schmidt(&[vec![2.0, 0.0, 0.0]], DEPENDENCE_TOL).unwrap();
    assert_eq!(f.columns()[0], vec![1.0, 0.0, 0.0]);
    assert_eq!(f.ambient_dim(), 3);
}

#[test]
fn gram_schmidt_rejects_dependent_inputs() {
    let err = gram_schmidt(&[vec![1.0, 0.0], vec![2.0, 0.0]], DEPENDENCE_TOL).unwrap_err();
    assert!(matches!(err, Error::LinearDependence { index: 1, .. }));
}

#[test]
fn gram_schmidt_rejects_too_many_vectors() {
    let err = gram_schmidt(&[vec![1.0], vec![2.0]], DEPENDENCE_TOL).unwrap_err();
    assert!(matches!(err, Error::InvalidParams(_)));
}

#[test]
fn gram_schmidt_near_dependent_stays_orthonormal() {
    let eps = 1e-7;
    let vs = vec![
        vec![1.0, 1.0, 1.0],
        vec![1.0, 1.0 + eps, 1.0],
        vec![1.0, 1.0, 1.0 + eps],
    ];
    let f = gram_schmidt(&vs, 1e-12).unwrap();
    assert!(f.orthonormality_error() < ORTHONORMAL_TOL);
}

#[test]
fn random_orthogonal_one_by_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let q = random_orthogonal(1, &mut rng);
    assert_eq!(q[(0, 0)].abs(), 1.0);
}

#[test]
fn random_orthogonal_is_orthogonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let q = random_orthogonal(4, &mut rng);
        let qtq = q.transpose().matmul(&q).unwrap();
        assert!(qtq.max_abs_diff(&DenseMatrix::identity(4)) < 1e-10);
    }
}

#[test]
fn random_orthogonal_reproducible() {
    let a = random_orthogonal(3, &mut ChaCha8Rng::seed_from_u64(42));
    let b = random_orthogonal(3, &mut ChaCha8Rng::seed_from_u64(42));
    assert_eq!(a.as_slice(), b.as_slice());
}

#[test]
fn random_orthogonal_first_column_is_not_biased() {
    // Haar: each entry has mean zero; a sign-unfixed QR would bias the diagonal.
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let trials = 4000;
    let mean_diag: f64 = (0..trials)
        .map(|_| random_orthogonal(3, &mut rng)[(0, 0)])
        .sum::<f64>()
        / trials as f64;
    // sd of an entry is 1/sqrt(3); 5 standard errors.
    assert!(mean_diag.abs() < 5.0 * (1.0 / 3f64).sqrt() / (trials as f64).sqrt());
}

#[test]
fn projection_of_coordinate_planes() {
    let f = gram_schmidt(&[vec![1.0, 0.0]], DEPENDENCE_TOL).unwrap();
    assert_eq!(projection_matrix(&f).as_slice(), &[1.0, 0.0, 0.0, 0.0]);
    let f = gram_schmidt(&[vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]], DEPENDENCE_TOL).unwrap();
    assert_eq!(
        projection_matrix(&f).as_slice(),
        &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]
    );
}

#[test]
fn projection_of_random_frame() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let vs: Vec<_> = (0..2).map(|_| gaussian_vector(4, &mut rng)).collect();
    let p = projection_matrix(&gram_schmidt(&vs, DEPENDENCE_TOL).unwrap());
    let p2 = p.matmul(&p).unwrap();
    assert!(p2.max_abs_diff(&p) < IDEMPOTENT_TOL);
    assert!((p.trace() - 2.0).abs() < IDEMPOTENT_TOL);
    assert_eq!(p, p.transpose());
}

#[test]
fn distance_examples() {
    assert_eq!(euclidean_distance(&[0.0, 0.0], &[3.0, 4.0]).unwrap(), 5.0);
    assert_eq!(euclidean_distance(&[1.5, -2.0], &[1.5, -2.0]).unwrap(), 0.0);
    let a = [1.0, 0.0, 0.0, 0.0];
    let b = [0.0, 0.0, 0.0, 1.0];
    assert!((euclidean_distance(&a, &b).unwrap() - 2f64.sqrt()).abs() < 1e-15);
    assert!(matches!(
        euclidean_distance(&[1.0], &[1.0, 2.0]),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn rank_of_simple_matrices() {
    let m = DenseMatrix::from_row_major(3, 2, vec![1.0, 2.0, 2.0, 4.0, 0.0, 0.0]).unwrap();
    assert_eq!(m.rank(1e-12), 1);
    assert_eq!(DenseMatrix::identity(5).rank(1e-12), 5);
    assert_eq!(DenseMatrix::zeros(2, 3).rank(1e-12), 0);
}

proptest! {
    #[test]
    fn gram_schmidt_orthonormal_and_same_span(seed in any::<u64>(), n in 1usize..8, k_frac in 0.0f64..1.0) {
        let k = 1 + ((n - 1) as f64 * k_frac) as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vs: Vec<_> = (0..k).map(|_| gaussian_vector(n, &mut rng)).collect();
        let f = gram_schmidt(&vs, DEPENDENCE_TOL).unwrap();
        prop_assert!(f.orthonormality_error() < ORTHONORMAL_TOL);
        // Each input lies in the output span and vice versa.
        let p = projection_matrix(&f);
        for v in &vs {
            let pv = p.mul_vec(v).unwrap();
            let scale = norm(v);
            prop_assert!(distance(&pv, v) < 1e-8 * scale.max(1.0));
        }
        let input = gram_schmidt(&vs, DEPENDENCE_TOL).unwrap();
        let pin = projection_matrix(&input);
        for c in f.columns() {
            prop_assert!(distance(&pin.mul_vec(c).unwrap(), c) < 1e-8);
        }
    }

    #[test]
    fn orthogonal_preserves_norms(seed in any::<u64>(), n in 1usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = random_orthogonal(n, &mut rng);
        let v = gaussian_vector(n, &mut rng);
        let qv = q.mul_vec(&v).unwrap();
        prop_assert!((norm(&qv) - norm(&v)).abs() < 1e-8 * norm(&v));
    }

    #[test]
    fn projection_independent_of_basis(seed in any::<u64>(), n in 2usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = 1 + (seed as usize % (n - 1));
        let vs: Vec<_> = (0..k).map(|_| gaussian_vector(n, &mut rng)).collect();
        let f = gram_schmidt(&vs, DEPENDENCE_TOL).unwrap();
        let mix = random_orthogonal(k, &mut rng);
        let mixed = f.to_matrix().matmul(&mix).unwrap();
        let g = gram_schmidt(&mixed.columns(), DEPENDENCE_TOL).unwrap();
        prop_assert!(projection_matrix(&f).max_abs_diff(&projection_matrix(&g)) < 1e-9);
    }

    #[test]
    fn triangle_inequality(seed in any::<u64>(), m in 1usize..20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = gaussian_vector(m, &mut rng);
        let b = gaussian_vector(m, &mut rng);
        let c = gaussian_vector(m, &mut rng);
        let ab = euclidean_distance(&a, &b).unwrap();
        let bc = euclidean_distance(&b, &c).unwrap();
        let ac = euclidean_distance(&a, &c).unwrap();
        prop_assert!(ac <= ab + bc + 1e-12);
        prop_assert_eq!(ab, euclidean_distance(&b, &a).unwrap());
    }
}
