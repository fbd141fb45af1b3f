//! Irreducibility testing with certificates.
//!
//! The positive direction is Burnside's criterion: a representation is
//! absolutely irreducible exactly when its image spans all of M_n as an
//! algebra. Words are enumerated breadth-first and only span-increasing
//! words are extended, so the search stops as soon as the span stabilizes.
//!
//! The negative direction hunts for an explicit invariant line (a common
//! eigenvector of the images) or an invariant hyperplane (a common
//! eigenvector of the transposes). Eigenvalue candidates are taken from
//! roots of unity in the context field and from the diagonal entries of
//! the images; every candidate is verified exactly before use. If the
//! span is deficient but no witness splits over the context field, the
//! verdict is reported as undetermined rather than guessed.

use std::collections::VecDeque;

use crate::linalg::Matrix;
use crate::numbers::CyclotomicNumber;
use crate::words::Word;

use super::Representation;

#[derive(Debug, Clone)]
pub enum Irreducibility {
    /// The listed words evaluate to a spanning set of M_n.
    Irreducible { spanning_words: Vec<Word> },
    /// Basis of a proper nonzero invariant subspace.
    Reducible { invariant_subspace: Vec<Vec<CyclotomicNumber>> },
    /// The generated algebra is a proper subalgebra of M_n, but no
    /// invariant subspace was found over the context field.
    Undetermined { span_dim: usize, reason: String },
}

impl Irreducibility {
    /// `Some(true)` / `Some(false)` for a decided verdict, `None` when
    /// the context field was too small to certify.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Irreducibility::Irreducible { .. } => Some(true),
            Irreducibility::Reducible { .. } => Some(false),
            Irreducibility::Undetermined { .. } => None,
        }
    }

    pub fn invariant_subspace(&self) -> Option<&[Vec<CyclotomicNumber>]> {
        match self {
            Irreducibility::Reducible { invariant_subspace } => Some(invariant_subspace),
            _ => None,
        }
    }
}

/// Incremental row-echelon basis for span growth queries.
struct SpanBasis {
    rows: Vec<Vec<CyclotomicNumber>>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    fn new() -> Self {
        SpanBasis {
            rows: vec![],
            pivots: vec![],
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis; insert the residue if nonzero.
    fn insert(&mut self, mut v: Vec<CyclotomicNumber>) -> bool {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                let t = &f * y;
                *x -= &t;
            }
        }
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().unwrap();
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

pub(super) fn decide(rep: &Representation) -> Irreducibility {
    let n = rep.rank();
    let full = n * n;
    let mut span = SpanBasis::new();
    let mut spanning_words = vec![];
    let mut queue: VecDeque<Word> = VecDeque::new();

    let identity = Word::identity();
    span.insert(Matrix::identity(n).to_vec());
    spanning_words.push(identity.clone());
    queue.push_back(identity);

    let letters: Vec<Word> = (0..rep.presentation().generator_count())
        .flat_map(|g| {
            [
                Word::generator(g),
                Word::generator(g).inverse(),
            ]
        })
        .collect();

    // breadth-first over span-increasing words; the span is monotone and
    // multiplicatively closed once it stops growing
    let length_cap = 2 * full;
    while let Some(w) = queue.pop_front() {
        if span.dim() == full {
            break;
        }
        if w.len() >= length_cap {
            continue;
        }
        for l in &letters {
            let next = w.mul(l);
            if next.len() <= w.len() {
                continue; // free cancellation: already seen
            }
            if span.insert(rep.evaluate(&next).to_vec()) {
                spanning_words.push(next.clone());
                queue.push_back(next);
                if span.dim() == full {
                    break;
                }
            }
        }
    }

    if span.dim() == full {
        return Irreducibility::Irreducible { spanning_words };
    }

    // witness search: invariant line, then invariant hyperplane
    if let Some(v) = common_eigenvector(rep.images()) {
        return Irreducibility::Reducible {
            invariant_subspace: vec![v],
        };
    }
    let transposed: Vec<Matrix> = rep.images().iter().map(Matrix::transpose).collect();
    if let Some(w) = common_eigenvector(&transposed) {
        // the annihilator of w is an invariant hyperplane
        let row = Matrix::from_rows(vec![w]);
        return Irreducibility::Reducible {
            invariant_subspace: row.kernel_basis(),
        };
    }

    Irreducibility::Undetermined {
        span_dim: span.dim(),
        reason: "generated algebra is proper but no invariant line or hyperplane \
                 splits over the context field"
            .into(),
    }
}

/// Verified eigenvalue candidates of one matrix: roots of unity in the
/// context field plus the matrix's own diagonal entries.
fn eigenvalue_candidates(m: &Matrix) -> Vec<CyclotomicNumber> {
    let mut order = 1;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            order = order.max(m[(i, j)].order());
        }
    }
    let char_poly = m.char_poly();
    let eval = |x: &CyclotomicNumber| -> CyclotomicNumber {
        let mut acc = CyclotomicNumber::int(0);
        for c in char_poly.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    };
    let mut out: Vec<CyclotomicNumber> = vec![];
    let mut push = |x: CyclotomicNumber| {
        if !x.is_zero() && eval(&x).is_zero() && !out.contains(&x) {
            out.push(x);
        }
    };
    for k in 0..order as i64 {
        push(CyclotomicNumber::root_of_unity(order, k));
    }
    for i in 0..m.rows() {
        push(m[(i, i)].clone());
    }
    out
}

/// A nonzero vector fixed up to scale by every matrix, if one exists over
/// the context field.
fn common_eigenvector(images: &[Matrix]) -> Option<Vec<CyclotomicNumber>> {
    if images.is_empty() {
        return None;
    }
    let n = images[0].rows();
    let candidate_sets: Vec<Vec<CyclotomicNumber>> =
        images.iter().map(eigenvalue_candidates).collect();
    if candidate_sets.iter().any(Vec::is_empty) {
        return None;
    }
    let mut choice = vec![0usize; images.len()];
    loop {
        // stack (A_g - lambda_g I) and intersect kernels
        let mut stacked = Matrix::zeros(n * images.len(), n);
        for (g, m) in images.iter().enumerate() {
            let lambda = &candidate_sets[g][choice[g]];
            for i in 0..n {
                for j in 0..n {
                    let mut e = m[(i, j)].clone();
                    if i == j {
                        e -= lambda;
                    }
                    stacked[(g * n + i, j)] = e;
                }
            }
        }
        let kernel = stacked.kernel_basis();
        if let Some(v) = kernel.into_iter().next() {
            return Some(v);
        }
        // advance the choice tuple
        let mut g = 0;
        loop {
            if g == images.len() {
                return None;
            }
            choice[g] += 1;
            if choice[g] < candidate_sets[g].len() {
                break;
            }
            choice[g] = 0;
            g += 1;
        }
    }
}

/// Exact check that the span of `basis` is invariant under every image.
pub fn subspace_is_invariant(rep: &Representation, basis: &[Vec<CyclotomicNumber>]) -> bool {
    if basis.is_empty() {
        return false;
    }
    let b = Matrix::from_rows(basis.to_vec());
    let k = b.rank();
    for m in rep.images() {
        for v in basis {
            let image = m.mul_vec(v);
            let mut rows = basis.to_vec();
            rows.push(image);
            if Matrix::from_rows(rows).rank() != k {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::CyclotomicNumber as Cyc;
    use crate::words::parse_presentation;

    fn trefoil_alpha(s: &Cyc) -> Representation {
        let p = parse_presentation("gens x,y; rel x^2 = y^3; ab x=3, y=2;").unwrap();
        let i = Cyc::root_of_unity(12, 3);
        let eta = Cyc::root_of_unity(12, 2);
        let x = Matrix::from_rows(vec![
            vec![i.clone(), Cyc::int(0)],
            vec![s.clone(), -&i],
        ]);
        let y = Matrix::from_rows(vec![
            vec![eta.clone(), eta.conj() - &eta],
            vec![Cyc::int(0), eta.conj()],
        ]);
        Representation::new(&p, vec![x, y]).unwrap()
    }

    #[test]
    fn alpha_family_verdicts() {
        // irreducible exactly off s = 0 and s = 2i
        let r = trefoil_alpha(&Cyc::int(1));
        assert_eq!(r.is_irreducible().as_bool(), Some(true));

        let r0 = trefoil_alpha(&Cyc::int(0));
        let verdict = r0.is_irreducible();
        assert_eq!(verdict.as_bool(), Some(false));
        let witness = verdict.invariant_subspace().unwrap();
        assert_eq!(witness.len(), 1, "expected an invariant line");
        assert!(subspace_is_invariant(&r0, witness));

        let two_i = Cyc::int(2) * Cyc::root_of_unity(12, 3);
        let r2i = trefoil_alpha(&two_i);
        let verdict = r2i.is_irreducible();
        assert_eq!(verdict.as_bool(), Some(false));
        assert!(subspace_is_invariant(&r2i, verdict.invariant_subspace().unwrap()));
    }

    #[test]
    fn reducible_fixture_with_supplied_subspace() {
        // block upper-triangular by construction: e1 spans an invariant line
        let p = parse_presentation("gens a,b; rel ;").unwrap();
        let a = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        let b = Matrix::from_int_rows(&[&[1, -2], &[0, 1]]);
        let r = Representation::new(&p, vec![a, b]).unwrap();
        let verdict = r.is_irreducible();
        assert_eq!(verdict.as_bool(), Some(false));
        assert!(subspace_is_invariant(&r, verdict.invariant_subspace().unwrap()));
    }

    #[test]
    fn rank_one_is_always_irreducible() {
        let p = parse_presentation("gens a; rel ;").unwrap();
        let r = Representation::new(&p, vec![Matrix::identity(1)]).unwrap();
        assert_eq!(r.is_irreducible().as_bool(), Some(true));
    }

    #[test]
    fn hyperplane_witness() {
        // an irreducible 2x2 pair in the corner with a translation part:
        // no common eigenvector, but the transposes share one, so the
        // witness is an invariant plane
        let p = parse_presentation("gens a,b; rel ;").unwrap();
        let i = Cyc::root_of_unity(12, 3);
        let eta = Cyc::root_of_unity(12, 2);
        let z = Cyc::int(0);
        let a = Matrix::from_rows(vec![
            vec![i.clone(), z.clone(), z.clone()],
            vec![Cyc::int(1), -&i, Cyc::int(1)],
            vec![z.clone(), z.clone(), Cyc::int(1)],
        ]);
        let b = Matrix::from_rows(vec![
            vec![eta.clone(), eta.conj() - &eta, z.clone()],
            vec![z.clone(), eta.conj(), z.clone()],
            vec![z.clone(), z.clone(), Cyc::int(1)],
        ]);
        let r = Representation::new(&p, vec![a, b]).unwrap();
        let verdict = r.is_irreducible();
        assert_eq!(verdict.as_bool(), Some(false));
        let witness = verdict.invariant_subspace().unwrap();
        assert_eq!(witness.len(), 2, "expected an invariant plane");
        assert!(subspace_is_invariant(&r, witness));
    }
}
