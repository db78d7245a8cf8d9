use super::*;
use crate::field::{LaurentPoly, DEFAULT_MODULUS};
use crate::rng::{self, Stream};

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn z(z0: i64, z1: i64) -> (Rational, Rational) {
    (r(z0), r(z1))
}

fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|row| row.iter().map(|&x| r(x)).collect()).collect())
}

#[test]
fn jordan_block_displays() {
    // J_1(v0): A=[1], B=[0]
    let j = MatrixPencil::make_block(&Block::Jordan(1, z(1, 0))).unwrap();
    assert_eq!(j.a(), &mat(&[&[1]]));
    assert_eq!(j.b(), &mat(&[&[0]]));
    // J_2(v0+v1): A=I, B=[[1,1],[0,1]]
    let j2 = MatrixPencil::make_block(&Block::Jordan(2, z(1, 1))).unwrap();
    assert_eq!(j2.a(), &mat(&[&[1, 0], &[0, 1]]));
    assert_eq!(j2.b(), &mat(&[&[1, 1], &[0, 1]]));
}

#[test]
fn left_block_display() {
    // L_1: A=[1 0], B=[0 1]
    let l1 = MatrixPencil::make_block(&Block::Left(1)).unwrap();
    assert_eq!(l1.a(), &mat(&[&[1, 0]]));
    assert_eq!(l1.b(), &mat(&[&[0, 1]]));
    // L_0 is 0×1, R_0 is 1×0.
    let l0 = MatrixPencil::make_block(&Block::Left(0)).unwrap();
    assert_eq!((l0.nrows(), l0.ncols()), (0, 1));
    let r0 = MatrixPencil::make_block(&Block::Right(0)).unwrap();
    assert_eq!((r0.nrows(), r0.ncols()), (1, 0));
}

#[test]
fn invalid_blocks_are_rejected() {
    assert_eq!(
        MatrixPencil::make_block(&Block::Jordan(0, z(1, 0))),
        Err(PencilError::JordanSizeZero)
    );
    assert_eq!(
        MatrixPencil::make_block(&Block::Jordan(2, z(0, 0))),
        Err(PencilError::ZeroEigenvalue)
    );
}

#[test]
fn block_sum_with_empty_is_identity() {
    let x = random_pencil(2, 3, 5);
    assert_eq!(x.block_sum(&MatrixPencil::empty()), x);
    assert_eq!(MatrixPencil::empty().block_sum(&x), x);
}

#[test]
fn block_sum_of_two_jordan_ones() {
    let j0 = MatrixPencil::make_block(&Block::Jordan(1, z(1, 0))).unwrap();
    let j1 = MatrixPencil::make_block(&Block::Jordan(1, z(0, 1))).unwrap();
    let s = j0.block_sum(&j1);
    assert_eq!(s.a(), &mat(&[&[1, 0], &[0, 0]]));
    assert_eq!(s.b(), &mat(&[&[0, 0], &[0, 1]]));
}

#[test]
fn block_sum_shapes_add() {
    let l2 = MatrixPencil::make_block(&Block::Left(2)).unwrap();
    let r1 = MatrixPencil::make_block(&Block::Right(1)).unwrap();
    let s = l2.block_sum(&r1);
    assert_eq!((s.nrows(), s.ncols()), (4, 4));
}

#[test]
fn box_product_is_repeated_block_sum() {
    let j = MatrixPencil::make_block(&Block::Jordan(1, z(1, 0))).unwrap();
    assert_eq!(j.box_times_identity(2).unwrap(), j.block_sum(&j));
    let l1 = MatrixPencil::make_block(&Block::Left(1)).unwrap();
    assert_eq!(l1.box_times_identity(1).unwrap(), l1);
    assert!(MatrixPencil::empty().box_times_identity(0).is_err());

    // (J_1(z) ⊠ I_3) decomposes into Jordan blocks (1,1,1) at z.
    let jz = MatrixPencil::make_block(&Block::Jordan(1, z(1, -2))).unwrap();
    let t = jz.box_times_identity(3).unwrap();
    let form = t.kronecker_decompose();
    let expected = KroneckerForm::from_blocks(&[
        Block::Jordan(1, z(1, -2)),
        Block::Jordan(1, z(1, -2)),
        Block::Jordan(1, z(1, -2)),
    ]);
    assert!(form.same_invariants(&expected));
}

#[test]
fn decompose_single_jordan_block() {
    // J_1(v0 + 2 v1): one size-1 block at certificate v0 + 2·v1.
    let p = MatrixPencil::make_block(&Block::Jordan(1, z(1, 2))).unwrap();
    let form = p.kronecker_decompose();
    assert!(form.left_indices.is_empty());
    assert!(form.right_indices.is_empty());
    assert_eq!(form.jordan.len(), 1);
    assert_eq!(form.jordan[0].sizes, vec![1]);
    match &form.jordan[0].certificate {
        Certificate::Explicit(f) => {
            assert!(f.proportional_to(&BinaryForm::linear(r(1), r(2))));
        }
        _ => panic!("expected explicit certificate"),
    }
}

#[test]
fn decompose_mixed_block_sum() {
    // L_1 ⊞ R_1 ⊞ J_2(v0), shape 5×5.
    let p = MatrixPencil::make_block(&Block::Left(1))
        .unwrap()
        .block_sum(&MatrixPencil::make_block(&Block::Right(1)).unwrap())
        .block_sum(&MatrixPencil::make_block(&Block::Jordan(2, z(1, 0))).unwrap());
    assert_eq!((p.nrows(), p.ncols()), (5, 5));
    let form = p.kronecker_decompose();
    assert_eq!(form.left_indices, vec![1]);
    assert_eq!(form.right_indices, vec![1]);
    assert_eq!(form.jordan.len(), 1);
    assert_eq!(form.jordan[0].sizes, vec![2]);
    match &form.jordan[0].certificate {
        Certificate::Explicit(f) => assert!(f.proportional_to(&BinaryForm::linear(r(1), r(0)))),
        _ => panic!("expected explicit certificate"),
    }
}

#[test]
fn decompose_generic_2x3() {
    let p = random_pencil(2, 3, 7);
    let form = p.kronecker_decompose();
    assert_eq!(form.left_indices, vec![2]);
    assert!(form.right_indices.is_empty());
    assert!(form.jordan.is_empty());
}

#[test]
fn decompose_zero_pencil() {
    let p = MatrixPencil::zeros(2, 3);
    let form = p.kronecker_decompose();
    assert_eq!(form.left_indices, vec![0, 0, 0]);
    assert_eq!(form.right_indices, vec![0, 0]);
    assert!(form.jordan.is_empty());
}

#[test]
fn generic_structure_examples() {
    // (2,3) → L_2
    let g = generic_structure(2, 3).unwrap();
    assert_eq!(g.left_indices, vec![2]);
    assert!(g.right_indices.is_empty() && g.jordan.is_empty());
    // (3,3) → three size-1 Jordan blocks at distinct eigenvalues
    let g = generic_structure(3, 3).unwrap();
    assert!(g.left_indices.is_empty() && g.right_indices.is_empty());
    assert_eq!(g.jordan.len(), 1);
    assert_eq!(g.jordan[0].sizes, vec![1]);
    assert_eq!(g.jordan[0].certificate.root_count(), 3);
    // (1,3): n2 > 2n1 → no concise tensors
    assert_eq!(generic_structure(1, 3), Err(PencilError::NoConciseTensors(1, 3)));
    // (4,3): R blocks
    let g = generic_structure(4, 3).unwrap();
    assert_eq!(g.right_indices, vec![1, 1, 1]);
    // accounting identities hold
    assert_eq!(g.rows(), 4);
    assert_eq!(g.cols(), 3);
}

#[test]
fn generic_structure_matches_random_decompositions() {
    for (n1, n2) in [(1, 1), (2, 2), (2, 3), (3, 2), (3, 5), (4, 6), (5, 3), (4, 4)] {
        let expected = generic_structure(n1, n2).unwrap();
        for seed in 0..5u64 {
            let p = random_pencil(n1, n2, 1000 + seed);
            let form = p.kronecker_decompose();
            assert!(
                form.same_structure_as(&expected),
                "shape ({n1},{n2}) seed {seed}: got {form:?}, expected {expected:?}"
            );
        }
    }
}

#[test]
fn det_form_of_jordan_sum() {
    // det(J_1(v0+2v1) ⊞ J_2(v0)) = (v0+2v1)·v0².
    let p = MatrixPencil::make_block(&Block::Jordan(1, z(1, 2)))
        .unwrap()
        .block_sum(&MatrixPencil::make_block(&Block::Jordan(2, z(1, 0))).unwrap());
    let det = p.det_form();
    let expected = BinaryForm::linear(r(1), r(2))
        .mul(&BinaryForm::linear(r(1), r(0)).pow(2));
    assert!(det.proportional_to(&expected));
}

/// Brute-force gcd of all k×k minors; the independent oracle for the
/// invariant-factor route.
fn minor_gcd_brute(p: &MatrixPencil, k: usize) -> Option<BinaryForm> {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }
    let mut gcd: Option<BinaryForm> = None;
    for rows in subsets(p.nrows(), k) {
        for cols in subsets(p.ncols(), k) {
            let a = Matrix::from_fn(k, k, |i, j| p.a()[(rows[i], cols[j])].clone());
            let b = Matrix::from_fn(k, k, |i, j| p.b()[(rows[i], cols[j])].clone());
            let minor = MatrixPencil::new(a, b).det_form();
            if minor.is_zero() {
                continue;
            }
            gcd = Some(match gcd {
                None => minor.normalized(),
                Some(g) => g.gcd(&minor),
            });
        }
    }
    gcd
}

#[test]
fn minor_gcd_matches_brute_force() {
    let cases: Vec<MatrixPencil> = vec![
        MatrixPencil::make_block(&Block::Left(1))
            .unwrap()
            .block_sum(&MatrixPencil::make_block(&Block::Jordan(2, z(1, 0))).unwrap()),
        MatrixPencil::make_block(&Block::Jordan(1, z(1, 2)))
            .unwrap()
            .block_sum(&MatrixPencil::make_block(&Block::Jordan(2, z(1, 2))).unwrap()),
        random_pencil(3, 4, 77),
        MatrixPencil::make_block(&Block::Right(1))
            .unwrap()
            .block_sum(&MatrixPencil::make_block(&Block::Jordan(1, z(0, 1))).unwrap()),
    ];
    for p in &cases {
        for k in 1..=p.nrows().min(p.ncols()) {
            let fast = p.minor_gcd(k);
            let brute = minor_gcd_brute(p, k);
            match (fast, brute) {
                (None, None) => {}
                (Some(f), Some(b)) => {
                    assert!(f.proportional_to(&b), "k={k} pencil={p:?}");
                }
                (f, b) => panic!("minor gcd disagreement at k={k}: {f:?} vs {b:?}"),
            }
        }
    }
}

#[test]
fn round_trip_with_conjugation() {
    // Seeded random block lists, conjugated on both sides; decomposition
    // must return exactly the constructed invariants.
    let mut rng = rng::stream(42, Stream::Conjugation, 0);
    for trial in 0..25u64 {
        let blocks = random_block_list(&mut rng);
        let expected = KroneckerForm::from_blocks(&blocks);
        let mut pencil = MatrixPencil::empty();
        for b in &blocks {
            pencil = pencil.block_sum(&MatrixPencil::make_block(b).unwrap());
        }
        let p_left = random_invertible(pencil.nrows(), &mut rng);
        let q_right = random_invertible(pencil.ncols(), &mut rng);
        let conj = pencil.conjugate(&p_left, &q_right);
        let form = conj.kronecker_decompose();
        assert!(
            form.same_invariants(&expected),
            "trial {trial}: blocks {blocks:?} gave {form:?}"
        );
        assert_eq!(form.rows(), pencil.nrows());
        assert_eq!(form.cols(), pencil.ncols());
    }
}

/// A random small block list with rational eigenvalues, total size ≤ 8×8.
pub(super) fn random_block_list(rng: &mut rand_chacha::ChaCha8Rng) -> Vec<Block> {
    use rand::Rng;
    let mut blocks = Vec::new();
    let (mut rows, mut cols) = (0usize, 0usize);
    let eigs: Vec<(Rational, Rational)> = vec![
        z(1, 0),
        z(0, 1),
        z(1, 1),
        z(1, -2),
        z(2, 3),
    ];
    for _ in 0..rng.gen_range(1..=4) {
        let choice = rng.gen_range(0..3);
        let (block, dr, dc) = match choice {
            0 => {
                let p = rng.gen_range(0..=2);
                (Block::Left(p), p, p + 1)
            }
            1 => {
                let p = rng.gen_range(0..=2);
                (Block::Right(p), p + 1, p)
            }
            _ => {
                let p = rng.gen_range(1..=3);
                let e = eigs[rng.gen_range(0..eigs.len())].clone();
                (Block::Jordan(p, e), p, p)
            }
        };
        if rows + dr > 8 || cols + dc > 8 {
            break;
        }
        rows += dr;
        cols += dc;
        blocks.push(block);
    }
    if blocks.is_empty() {
        blocks.push(Block::Jordan(1, z(1, 0)));
    }
    blocks
}

#[test]
fn block_sum_commutes_on_invariants() {
    let x = MatrixPencil::make_block(&Block::Left(2)).unwrap();
    let y = MatrixPencil::make_block(&Block::Jordan(2, z(1, 5))).unwrap();
    let f1 = x.block_sum(&y).kronecker_decompose();
    let f2 = y.block_sum(&x).kronecker_decompose();
    assert!(f1.same_invariants(&f2));
}

#[test]
fn invariants_are_gl_invariant_with_moebius_on_certificates() {
    let mut rng = rng::stream(9, Stream::Conjugation, 3);
    let pencil = MatrixPencil::make_block(&Block::Jordan(2, z(1, 3)))
        .unwrap()
        .block_sum(&MatrixPencil::make_block(&Block::Jordan(1, z(1, -1))).unwrap())
        .block_sum(&MatrixPencil::make_block(&Block::Left(1)).unwrap());
    let base = pencil.kronecker_decompose();

    // Basis change on V1, V2: invariants unchanged, certificates equal.
    let p_left = random_invertible(pencil.nrows(), &mut rng);
    let q_right = random_invertible(pencil.ncols(), &mut rng);
    let conj = pencil.conjugate(&p_left, &q_right).kronecker_decompose();
    assert!(conj.same_invariants(&base));

    // Change of basis on V0: g(v0) = a·v0 + c·v1, g(v1) = b·v0 + d·v1
    // maps (A,B) to (aA + bB, cA + dB); sizes are unchanged and each
    // certificate transforms by the induced substitution.
    let (a, b, c, d) = (r(2), r(1), r(1), r(1)); // det = 1
    let new_pencil = MatrixPencil::new(
        pencil.a().scale(&a).add(&pencil.b().scale(&b)),
        pencil.a().scale(&c).add(&pencil.b().scale(&d)),
    );
    let moved = new_pencil.kronecker_decompose();
    assert!(moved.same_structure_as(&base));
    assert_eq!(moved.left_indices, base.left_indices);
    let l0 = BinaryForm::linear(a.clone(), c.clone());
    let l1 = BinaryForm::linear(b.clone(), d.clone());
    for (orig, new) in base.jordan.iter().zip(moved.jordan.iter()) {
        let (Certificate::Explicit(f), Certificate::Explicit(g)) =
            (&orig.certificate, &new.certificate)
        else {
            panic!("expected explicit certificates")
        };
        assert_eq!(orig.sizes, new.sizes);
        assert!(f.substitute(&l0, &l1).proportional_to(g));
    }
}

#[test]
fn reconstruction_has_same_invariants() {
    let mut rng = rng::stream(4242, Stream::Conjugation, 1);
    for _ in 0..10 {
        let blocks = random_block_list(&mut rng);
        let expected = KroneckerForm::from_blocks(&blocks);
        let rebuilt = expected.reconstruct_exact().unwrap();
        assert!(rebuilt.kronecker_decompose().same_invariants(&expected));
    }
    // Generic certificates get representatives.
    let g = generic_structure(3, 3).unwrap();
    let rep = g.reconstruct_representative().unwrap();
    assert!(rep.kronecker_decompose().same_structure_as(&g));
}

#[test]
fn pokrzywa_counts_for_critical_normal_form() {
    // A(ζ1,ζ2) = (J_1(z_1) ⊞ J_1(z_2)) ⊠ I_2 for m = m12 = 2:
    // d_{1,ζ_i} = 2, no singular blocks.
    let a = MatrixPencil::make_block(&Block::Jordan(1, z(1, 2)))
        .unwrap()
        .block_sum(&MatrixPencil::make_block(&Block::Jordan(1, z(1, 5))).unwrap())
        .box_times_identity(2)
        .unwrap();
    let inv = pokrzywa_invariants(&a, (4, 4)).unwrap();
    assert!(!inv.has_singular_blocks());
    assert_eq!(inv.d_at(&BinaryForm::linear(r(1), r(2)), 1), 2);
    assert_eq!(inv.d_at(&BinaryForm::linear(r(1), r(5)), 1), 2);
    assert_eq!(inv.d_at(&BinaryForm::linear(r(1), r(7)), 1), 0);
}

#[test]
fn pokrzywa_padding_counts() {
    // Subcritical normal form with (m, m12, k1, k2) = (2,2,1,1):
    // T1 = J_1(z_1) ⊞ J_1(z_2) (sizes 2×2), T2 generic 1×1; ambient (4,4)
    // adds one R_0 and one L_0.
    let t1 = MatrixPencil::make_block(&Block::Jordan(1, z(1, 2)))
        .unwrap()
        .block_sum(&MatrixPencil::make_block(&Block::Jordan(1, z(1, 5))).unwrap());
    let t2 = random_pencil(1, 1, 3);
    let b = t1.block_sum(&t2);
    let inv = pokrzywa_invariants(&b, (4, 4)).unwrap();
    assert_eq!(inv.r.get(&0), Some(&1));
    assert_eq!(inv.l.get(&0), Some(&1));
    assert_eq!(inv.total_right(), 1);
    assert_eq!(inv.total_left(), 1);

    // A concise square pencil in its own ambient has no singular padding.
    let sq = random_pencil(3, 3, 8);
    let inv = pokrzywa_invariants(&sq, (3, 3)).unwrap();
    assert_eq!(inv.total_left(), 0);
    assert_eq!(inv.total_right(), 0);

    // Ambient smaller than the pencil is rejected.
    assert!(pokrzywa_invariants(&sq, (2, 3)).is_err());
}

#[test]
fn degeneration_inequality_examples() {
    // A with m = 2, m12 = 2: d_{1,ζ} = 2 at two eigenvalues.
    let a_form = KroneckerForm::from_blocks(&[
        Block::Jordan(1, z(1, 2)),
        Block::Jordan(1, z(1, 2)),
        Block::Jordan(1, z(1, 5)),
        Block::Jordan(1, z(1, 5)),
    ]);
    // B with k1 = 1: d_{1,ζ} = 1 at the same eigenvalues.
    let b_form = KroneckerForm::from_blocks(&[
        Block::Jordan(1, z(1, 2)),
        Block::Jordan(1, z(1, 5)),
        Block::Right(0),
        Block::Left(0),
    ]);
    // 2 ≤ 1·1 + 1
    assert_eq!(paper_degeneration_check(&a_form, &b_form, 1), Ok(true));

    // m12 = 3: d1(A) = 3 against d1(B) = 1, k1 = 1: 3 ≤ 1 + 1 fails.
    let a3 = KroneckerForm::from_blocks(&[
        Block::Jordan(1, z(1, 2)),
        Block::Jordan(1, z(1, 2)),
        Block::Jordan(1, z(1, 2)),
    ]);
    let b3 = KroneckerForm::from_blocks(&[Block::Jordan(1, z(1, 2))]);
    assert_eq!(paper_degeneration_check(&a3, &b3, 1), Ok(false));

    // Identical forms with k1 = 0 degenerate trivially.
    assert_eq!(paper_degeneration_check(&a_form, &a_form, 0), Ok(true));

    // Sources with singular blocks are out of scope.
    assert_eq!(
        paper_degeneration_check(&b_form, &b_form, 0),
        Err(PencilError::SingularSource)
    );
}

#[test]
fn epsilon_limit_smoke() {
    use crate::tensor::DenseTensor;
    let eps = LaurentPoly::<Rational>::epsilon();
    let one = LaurentPoly::<Rational>::one();
    // source = [1 + ε, ε·(ε⁻¹)] → limit [1, 1]
    let source = DenseTensor::from_entries(
        vec![2],
        vec![one.add(&eps), eps.mul(&LaurentPoly::monomial(Rational::one(), -1))],
    );
    let target = DenseTensor::from_entries(vec![2], vec![r(1), r(1)]);
    let id = Matrix::identity(2);
    assert!(verify_epsilon_limit(&[id.clone()], &source, &target).is_ok());

    // a surviving pole is reported with its order
    let bad =
        DenseTensor::from_entries(vec![2], vec![LaurentPoly::monomial(r(3), -2), one.clone()]);
    let err = verify_epsilon_limit(&[id.clone()], &bad, &target).unwrap_err();
    assert_eq!(err, EpsilonError::Pole { index: vec![0], order: 2 });

    // a wrong limit is a mismatch
    let off = DenseTensor::from_entries(vec![2], vec![one.clone(), one.clone()]);
    let target2 = DenseTensor::from_entries(vec![2], vec![r(1), r(2)]);
    assert!(matches!(
        verify_epsilon_limit(&[id], &off, &target2),
        Err(EpsilonError::LimitMismatch { .. })
    ));
}

#[test]
fn tensor_round_trip() {
    let p = random_pencil(2, 4, 19);
    assert_eq!(MatrixPencil::from_tensor(&p.to_tensor()), p);
}

#[test]
fn normal_rank_of_singular_pencil() {
    let p = MatrixPencil::make_block(&Block::Left(2)).unwrap(); // 2×3, rank 2
    assert_eq!(p.normal_rank(), 2);
    assert_eq!(MatrixPencil::zeros(2, 2).normal_rank(), 0);
}

#[test]
fn rank_sequences_work_over_prime_field_sizes() {
    // decomposition is exact; check a moderately large conjugated case
    let blocks = vec![
        Block::Jordan(2, z(1, 0)),
        Block::Jordan(2, z(1, 0)),
        Block::Left(1),
        Block::Right(0),
    ];
    let mut pencil = MatrixPencil::empty();
    for b in &blocks {
        pencil = pencil.block_sum(&MatrixPencil::make_block(b).unwrap());
    }
    let mut rng = rng::stream(17, Stream::Conjugation, 9);
    let conj = pencil.conjugate(
        &random_invertible(pencil.nrows(), &mut rng),
        &random_invertible(pencil.ncols(), &mut rng),
    );
    let form = conj.kronecker_decompose();
    assert!(form.same_invariants(&KroneckerForm::from_blocks(&blocks)));
    let _ = DEFAULT_MODULUS;
}
