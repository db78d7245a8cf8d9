use pencilnet::pencil::*;
use pencilnet::field::*;
use pencilnet::linalg::*;

fn main() {
    let z = |a: i64, b: i64| (Rational::from_integer(a), Rational::from_integer(b));
    let blocks = vec![
        Block::Jordan(2, z(1, 0)),
        Block::Jordan(2, z(1, 0)),
        Block::Left(1),
        Block::Right(1),
    ];
    let mut pencil = MatrixPencil::empty();
    for b in &blocks {
        pencil = pencil.block_sum(&MatrixPencil::make_block(b).unwrap());
    }
    let mut rng = pencilnet::rng::stream(17, pencilnet::rng::Stream::Conjugation, 9);
    let p = random_invertible(pencil.nrows(), &mut rng);
    let q = random_invertible(pencil.ncols(), &mut rng);
    let conj = pencil.conjugate(&p, &q);
    eprintln!("shape {}x{}", conj.nrows(), conj.ncols());
    let t0 = std::time::Instant::now();
    eprintln!("normal rank = {} ({:?})", conj.normal_rank(), t0.elapsed());
    let t0 = std::time::Instant::now();
    let form = conj.kronecker_decompose();
    eprintln!("decompose {:?} -> {:?}", t0.elapsed(), form);
}
