mod oracle;

use preproj_core::cartan::validate_gcm;
use preproj_core::field::{PrimeField, Rationals};
use preproj_core::quiver::{quiver_presentation, PresentationMode};
use preproj_core::rewrite::{default_max_degree, RewriteSystem};

fn engine_dim(c: &[Vec<i64>], d: &[u64]) -> usize {
    let cd = validate_gcm(c.to_vec(), d.to_vec(), None).unwrap();
    let p = quiver_presentation(&cd, PresentationMode::Pi);
    RewriteSystem::complete(&Rationals, &p, default_max_degree(&p)).unwrap().irreducible_words().len()
}

/// `(name, C, D, dim)`.
type Fixture = (&'static str, Vec<Vec<i64>>, Vec<u64>, usize);

/// Values computed by the oracle and then frozen.
fn fixtures() -> Vec<Fixture> {
    let a2 = vec![vec![2, -1], vec![-1, 2]];
    let b2 = vec![vec![2, -1], vec![-2, 2]];
    vec![
        ("A1 c=1", vec![vec![2]], vec![1], 1),
        ("A1 c=2", vec![vec![2]], vec![2], 2),
        ("A1 c=3", vec![vec![2]], vec![3], 3),
        ("A2 D=I", a2.clone(), vec![1, 1], 4),
        ("A2 D=2I", a2, vec![2, 2], 8),
        ("B2 minimal", b2.clone(), vec![2, 1], 10),
        ("B2 doubled", b2, vec![4, 2], 20),
        ("G2 minimal", vec![vec![2, -1], vec![-3, 2]], vec![3, 1], 28),
        ("A3 minimal", vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]], vec![1, 1, 1], 10),
        ("B3 minimal", vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]], vec![2, 2, 1], 35),
    ]
}

#[test]
fn oracle_matches_frozen_dimensions() {
    for (name, c, d, dim) in fixtures() {
        assert_eq!(oracle::preprojective_dim(&c, &d, 40), Some(dim), "{name}");
    }
}

#[test]
fn engine_matches_frozen_dimensions() {
    for (name, c, d, dim) in fixtures() {
        assert_eq!(engine_dim(&c, &d), dim, "{name}");
    }
}

#[test]
fn classical_type_a_dimension() {
    // dim Π(A_n) = n(n+1)(n+2)/6 in the symmetric case
    for n in 1..=4usize {
        let c: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            2
                        } else if i.abs_diff(j) == 1 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        assert_eq!(engine_dim(&c, &vec![1; n]), n * (n + 1) * (n + 2) / 6);
    }
}

#[test]
fn scaling_the_symmetrizer_scales_the_dimension() {
    // Π(C, mD) has dimension m · dim Π(C, D) on these instances
    for (_, c, d, dim) in fixtures() {
        let doubled: Vec<u64> = d.iter().map(|x| 2 * x).collect();
        assert_eq!(oracle::preprojective_dim(&c, &doubled, 40), Some(2 * dim));
    }
}

#[test]
fn prime_field_gives_the_same_dimension() {
    let k = PrimeField::new(101).unwrap();
    for (name, c, d, dim) in fixtures() {
        let cd = validate_gcm(c, d, None).unwrap();
        let p = quiver_presentation(&cd, PresentationMode::Pi);
        let rs = RewriteSystem::complete(&k, &p, default_max_degree(&p)).unwrap();
        assert_eq!(rs.irreducible_words().len(), dim, "{name}");
    }
}
