use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::PairGenerator;
use crate::scalar::Gf2;

use super::matrix::Matrix;

/// A coordinate vector over `GF(2)`.
pub type Gf2Vector = Vec<Gf2>;

/// A linear map stored by the images of the basis vectors (as columns).
pub type LinearMap = Matrix<Gf2>;

/// The action of the generators of `D x D` on a module, one map each.
pub type ActionSpec = Vec<(PairGenerator, LinearMap)>;

/// A finite-dimensional `GF(2)`-space with named basis vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gf2Space {
    labels: Vec<String>,
}

impl Gf2Space {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        Gf2Space { labels: labels.into_iter().map(Into::into).collect() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zero(&self) -> Gf2Vector {
        vec![Gf2::ZERO; self.dim()]
    }

    pub fn basis(&self, i: usize) -> Gf2Vector {
        let mut v = self.zero();
        v[i] = Gf2::ONE;
        v
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Parses a sum of basis labels such as `v+w+wx`, or `0`.
    pub fn parse(&self, s: &str) -> Result<Gf2Vector> {
        let mut v = self.zero();
        let s = s.trim();
        if s == "0" {
            return Ok(v);
        }
        for token in s.split('+') {
            let i = self
                .index_of(token.trim())
                .ok_or_else(|| Error::Parse(format!("unknown basis label {:?} in {s:?}", token.trim())))?;
            v[i] += Gf2::ONE;
        }
        Ok(v)
    }

    pub fn render(&self, v: &[Gf2]) -> String {
        let parts: Vec<&str> =
            v.iter().zip(&self.labels).filter(|(c, _)| **c == Gf2::ONE).map(|(_, l)| l.as_str()).collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

pub fn add(u: &[Gf2], v: &[Gf2]) -> Gf2Vector {
    u.iter().zip(v).map(|(&a, &b)| a + b).collect()
}

pub fn is_zero(v: &[Gf2]) -> bool {
    v.iter().all(|c| *c == Gf2::ZERO)
}

/// The lexicographically ordered 3-element subsets of `0..n`.
pub fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push([i, j, k]);
            }
        }
    }
    out
}

/// `u ^ v ^ w` in the third exterior power of an `n`-dimensional space,
/// in the basis of [`triples`].
pub fn wedge(n: usize, u: &[Gf2], v: &[Gf2], w: &[Gf2]) -> Gf2Vector {
    let index: BTreeMap<[usize; 3], usize> = triples(n).into_iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut out = vec![Gf2::ZERO; index.len()];
    let support = |x: &[Gf2]| -> Vec<usize> { (0..n).filter(|&i| x[i] == Gf2::ONE).collect() };
    for &i in &support(u) {
        for &j in &support(v) {
            for &k in &support(w) {
                if i == j || j == k || i == k {
                    continue;
                }
                let mut t = [i, j, k];
                t.sort_unstable();
                out[index[&t]] += Gf2::ONE;
            }
        }
    }
    out
}

/// The third exterior power, with its induced action. Basis labels join
/// the factor labels with `^`.
pub fn exterior_cube(space: &Gf2Space, action: &ActionSpec) -> Result<(Gf2Space, ActionSpec)> {
    let n = space.dim();
    if n < 3 {
        return Err(Error::DimensionTooSmall(n));
    }
    let ts = triples(n);
    let labels = ts.iter().map(|t| t.iter().map(|&i| space.labels[i].as_str()).collect::<Vec<_>>().join("^"));
    let cube = Gf2Space::new(labels);
    let mut out = Vec::new();
    for (g, m) in action {
        check_square(m, n)?;
        let cols: Vec<Gf2Vector> =
            ts.iter().map(|t| wedge(n, &m.column(t[0]), &m.column(t[1]), &m.column(t[2]))).collect();
        out.push((*g, Matrix::from_columns(ts.len(), &cols)?));
    }
    Ok((cube, out))
}

fn check_square(m: &LinearMap, n: usize) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch(format!("{}x{} map on a {n}-dimensional space", m.rows(), m.cols())));
    }
    Ok(())
}

/// The vectors `(g - 1) e_j` over all generators and basis vectors; they
/// span the submodule whose quotient is the coinvariants.
pub fn image_sum(dim: usize, action: &ActionSpec) -> Result<Vec<Gf2Vector>> {
    let mut out = Vec::new();
    for (_, m) in action {
        check_square(m, dim)?;
        for j in 0..dim {
            let mut col = m.column(j);
            col[j] += Gf2::ONE;
            if !is_zero(&col) {
                out.push(col);
            }
        }
    }
    Ok(out)
}

/// A row-reduced basis of the span of the given vectors.
pub fn span_basis(dim: usize, vectors: &[Gf2Vector]) -> Result<Vec<Gf2Vector>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let m = Matrix::from_rows(vectors)?;
    if m.cols() != dim {
        return Err(Error::DimensionMismatch(format!("vectors of length {} in dimension {dim}", m.cols())));
    }
    let e = m.rref();
    Ok((0..e.pivots.len()).map(|r| e.matrix.row(r).to_vec()).collect())
}

pub fn in_span(dim: usize, vectors: &[Gf2Vector], v: &[Gf2]) -> Result<bool> {
    if vectors.is_empty() {
        return Ok(is_zero(v));
    }
    let a = Matrix::from_columns(dim, vectors)?;
    Ok(a.solve(v)?.is_some())
}

pub fn same_span(dim: usize, a: &[Gf2Vector], b: &[Gf2Vector]) -> Result<bool> {
    Ok(span_basis(dim, a)? == span_basis(dim, b)?)
}

/// Whether `v` has nonzero class in the coinvariants of the action.
pub fn coinvariant_class_nonzero(dim: usize, action: &ActionSpec, v: &[Gf2]) -> Result<bool> {
    Ok(!in_span(dim, &image_sum(dim, action)?, v)?)
}

/// The quotient `V / W` by a stable subspace, with basis the coordinates
/// of `V` that are not pivots of the row-reduced basis of `W`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub space: Gf2Space,
    pub action: ActionSpec,
    coords: Vec<usize>,
    reducer: Vec<(usize, Gf2Vector)>,
}

impl Quotient {
    /// Coordinates of the class of `v`.
    pub fn project(&self, v: &[Gf2]) -> Gf2Vector {
        let mut v = v.to_vec();
        for (p, row) in &self.reducer {
            if v[*p] == Gf2::ONE {
                v = add(&v, row);
            }
        }
        self.coords.iter().map(|&c| v[c]).collect()
    }

    /// The coordinates of the ambient space kept as quotient basis.
    pub fn kept_coordinates(&self) -> &[usize] {
        &self.coords
    }
}

pub fn quotient_by_subspace(
    space: &Gf2Space,
    action: &ActionSpec,
    subspace: &[Gf2Vector],
) -> Result<Quotient> {
    let n = space.dim();
    let basis = span_basis(n, subspace)?;
    for (g, m) in action {
        check_square(m, n)?;
        for s in &basis {
            if !in_span(n, &basis, &m.apply(s)?)? {
                return Err(Error::UnstableSubspace(format!("{g} moves {} out of the subspace", space.render(s))));
            }
        }
    }
    let reducer: Vec<(usize, Gf2Vector)> = basis
        .iter()
        .map(|row| (row.iter().position(|c| *c == Gf2::ONE).expect("nonzero basis row"), row.clone()))
        .collect();
    let coords: Vec<usize> = (0..n).filter(|c| !reducer.iter().any(|(p, _)| p == c)).collect();
    let q_space = Gf2Space::new(coords.iter().map(|&c| space.labels[c].clone()));
    let mut q = Quotient { space: q_space, action: Vec::new(), coords, reducer };
    for (g, m) in action {
        let cols: Vec<Gf2Vector> = q.coords.iter().map(|&c| q.project(&m.column(c))).collect();
        let qm = Matrix::from_columns(q.coords.len(), &cols)?;
        q.action.push((*g, qm));
    }
    Ok(q)
}

/// Renders an action table: one row per generator, the images of the
/// basis vectors separated by ` | `.
pub fn render_action_table(space: &Gf2Space, action: &ActionSpec) -> String {
    let mut out = format!("basis: {}\n", space.labels().join(" "));
    for (g, m) in action {
        let cells: Vec<String> = (0..space.dim()).map(|j| space.render(&m.column(j))).collect();
        out.push_str(&format!("{} | {}\n", g.label(), cells.join(" | ")));
    }
    out
}

/// Parses one table row `(x,1) | v | wx+w2x | ...` into its generator and map.
pub fn parse_action_row(space: &Gf2Space, line: &str) -> Result<(PairGenerator, LinearMap)> {
    let mut cells = line.split('|');
    let head = cells.next().unwrap_or_default();
    let g: PairGenerator = head.parse().map_err(Error::Parse)?;
    let cols: Vec<Gf2Vector> = cells.map(|c| space.parse(c)).collect::<Result<_>>()?;
    if cols.len() != space.dim() {
        return Err(Error::Parse(format!("row {g} has {} entries, expected {}", cols.len(), space.dim())));
    }
    Ok((g, Matrix::from_columns(space.dim(), &cols)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space3() -> Gf2Space {
        Gf2Space::new(["p", "q", "r"])
    }

    fn swap_pq() -> LinearMap {
        let s = space3();
        Matrix::from_columns(3, &[s.basis(1), s.basis(0), s.basis(2)]).unwrap()
    }

    #[test]
    fn labels_parse_and_render() {
        let s = space3();
        let v = s.parse("p+r").unwrap();
        assert_eq!(s.render(&v), "p+r");
        assert_eq!(s.parse("p+p").unwrap(), s.zero());
        assert_eq!(s.render(&s.zero()), "0");
        assert!(s.parse("z").is_err());
    }

    #[test]
    fn wedge_is_alternating() {
        let s = space3();
        let (p, q, r) = (s.basis(0), s.basis(1), s.basis(2));
        assert_eq!(wedge(3, &p, &q, &r), vec![Gf2::ONE]);
        assert_eq!(wedge(3, &p, &p, &r), vec![Gf2::ZERO]);
        assert_eq!(wedge(3, &add(&p, &q), &q, &r), vec![Gf2::ONE]);
    }

    #[test]
    fn triples_are_lexicographic() {
        assert_eq!(triples(4), vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
        assert_eq!(triples(5).len(), 10);
    }

    #[test]
    fn cube_of_small_space_rejected() {
        let s = Gf2Space::new(["p", "q"]);
        assert!(matches!(exterior_cube(&s, &Vec::new()), Err(Error::DimensionTooSmall(2))));
    }

    #[test]
    fn coinvariants_of_a_swap() {
        let s = space3();
        let action = vec![(PairGenerator::X1, swap_pq())];
        let rel = image_sum(3, &action).unwrap();
        assert!(same_span(3, &rel, &[s.parse("p+q").unwrap()]).unwrap());
        assert!(coinvariant_class_nonzero(3, &action, &s.basis(0)).unwrap());
        assert!(!coinvariant_class_nonzero(3, &action, &s.parse("p+q").unwrap()).unwrap());
    }

    #[test]
    fn quotient_requires_stability() {
        let s = space3();
        let action = vec![(PairGenerator::X1, swap_pq())];
        assert!(matches!(
            quotient_by_subspace(&s, &action, &[s.basis(0)]),
            Err(Error::UnstableSubspace(_))
        ));
        let q = quotient_by_subspace(&s, &action, &[s.parse("p+q").unwrap()]).unwrap();
        assert_eq!(q.space.labels(), ["q", "r"]);
        assert_eq!(q.project(&s.basis(0)), vec![Gf2::ONE, Gf2::ZERO]);
        assert_eq!(q.action[0].1, Matrix::identity(2));
    }

    #[test]
    fn table_round_trip() {
        let s = space3();
        let action = vec![(PairGenerator::Y2, swap_pq())];
        let text = render_action_table(&s, &action);
        let row = text.lines().nth(1).unwrap();
        assert_eq!(row, "(1,y) | q | p | r");
        assert_eq!(parse_action_row(&s, row).unwrap(), action[0]);
    }
}
