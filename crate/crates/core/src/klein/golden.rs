//! Reference tables shipped with the crate, their parsers, and the
//! deliberate corruptions used to show the certificate can fail.

use crate::error::{Error, Result};
use crate::f2::{parse_action_row, ActionSpec, Gf2Space};
use crate::group::{Group, KleinElement, Pair, PairGenerator};
use crate::parse::{pair_tuple, ring_element};
use crate::ring::GroupRing;
use crate::scalar::Gf2;

const OMEGA: &str = include_str!("../../data/omega.txt");
const TTERMS: &str = include_str!("../../data/tterms.txt");
const JTABLE: &str = include_str!("../../data/jtable.txt");
const CUBETABLE: &str = include_str!("../../data/cubetable.txt");
const RESOLUTION: &str = include_str!("../../data/resolution.txt");

/// One term `+/- [p1|p2|p3|p4]` of the fundamental cycle.
pub type SignedTuple = (i64, Vec<Pair<KleinElement>>);

/// The differentials `d1` and `d2` of the one-relator resolution.
pub type ResolutionEntries = (Vec<GroupRing<KleinElement, i64>>, Vec<GroupRing<KleinElement, i64>>);

/// One row of the fourth-power table: a label, the sign of the cycle term
/// and the four factors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TTerm {
    pub label: String,
    pub sign: i64,
    pub factors: [GroupRing<KleinElement, i64>; 4],
}

#[derive(Clone, Debug)]
pub struct CubeTable {
    pub space: Gf2Space,
    /// `a = v^w^wx` and so on, as indices into the `J` basis.
    pub definitions: Vec<[String; 3]>,
    pub action: ActionSpec,
}

#[derive(Clone, Debug)]
pub struct Goldens {
    pub omega: Vec<SignedTuple>,
    pub tterms: Vec<TTerm>,
    pub jtable: ActionSpec,
    pub cube: CubeTable,
    pub resolution: ResolutionEntries,
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_omega(text: &str) -> Result<Vec<SignedTuple>> {
    content_lines(text)
        .map(|l| {
            let (sign, rest) = match l.split_at(1) {
                ("+", r) => (1, r),
                ("-", r) => (-1, r),
                _ => return Err(Error::Parse(format!("missing sign in {l:?}"))),
            };
            Ok((sign, pair_tuple(rest)?))
        })
        .collect()
}

pub fn parse_tterms(text: &str) -> Result<Vec<TTerm>> {
    content_lines(text)
        .map(|l| {
            let (head, body) = l.split_once(':').ok_or_else(|| Error::Parse(format!("missing ':' in {l:?}")))?;
            let mut head = head.split_whitespace();
            let label = head.next().ok_or_else(|| Error::Parse(format!("missing label in {l:?}")))?.to_string();
            let sign = match head.next() {
                Some("+") => 1,
                Some("-") => -1,
                _ => return Err(Error::Parse(format!("missing sign in {l:?}"))),
            };
            let factors: Vec<_> = body.split('|').map(ring_element).collect::<Result<_>>()?;
            let factors: [_; 4] =
                factors.try_into().map_err(|_| Error::Parse(format!("expected four factors in {l:?}")))?;
            Ok(TTerm { label, sign, factors })
        })
        .collect()
}

fn parse_basis_header(line: Option<&str>) -> Result<Gf2Space> {
    let labels = line
        .and_then(|l| l.strip_prefix("basis:"))
        .ok_or_else(|| Error::Parse("expected a 'basis:' header".into()))?;
    Ok(Gf2Space::new(labels.split_whitespace()))
}

pub fn parse_jtable(text: &str) -> Result<(Gf2Space, ActionSpec)> {
    let mut lines = content_lines(text);
    let space = parse_basis_header(lines.next())?;
    let action = lines.map(|l| parse_action_row(&space, l)).collect::<Result<_>>()?;
    Ok((space, action))
}

pub fn parse_cubetable(text: &str) -> Result<CubeTable> {
    let mut lines = content_lines(text).peekable();
    let space = parse_basis_header(lines.next())?;
    let mut definitions = Vec::new();
    let mut action: ActionSpec = Vec::new();
    for l in lines {
        if let Some((name, def)) = l.split_once('=') {
            let parts: Vec<String> = def.trim().split('^').map(str::to_string).collect();
            let parts: [String; 3] =
                parts.try_into().map_err(|_| Error::Parse(format!("expected a triple wedge in {l:?}")))?;
            if space.index_of(name.trim()) != Some(definitions.len()) {
                return Err(Error::Parse(format!("definition out of order: {l:?}")));
            }
            definitions.push(parts);
        } else if let Some(rest) = l.strip_prefix("same-as") {
            let (src, targets) =
                rest.split_once(':').ok_or_else(|| Error::Parse(format!("missing ':' in {l:?}")))?;
            let src: PairGenerator = src.trim().parse().map_err(Error::Parse)?;
            let map = action
                .iter()
                .find(|(g, _)| *g == src)
                .map(|(_, m)| m.clone())
                .ok_or_else(|| Error::Parse(format!("{src} has no row yet")))?;
            for t in targets.split_whitespace() {
                action.push((t.parse().map_err(Error::Parse)?, map.clone()));
            }
        } else {
            action.push(parse_action_row(&space, l)?);
        }
    }
    action.sort_by_key(|(g, _)| *g);
    Ok(CubeTable { space, definitions, action })
}

pub fn parse_resolution(text: &str) -> Result<ResolutionEntries> {
    let mut d1 = Vec::new();
    let mut d2 = Vec::new();
    for l in content_lines(text) {
        let (lhs, rhs) = l.split_once('=').ok_or_else(|| Error::Parse(format!("missing '=' in {l:?}")))?;
        if lhs.trim().starts_with("d1") {
            d1.push(ring_element(rhs)?);
        } else if lhs.trim().starts_with("d2") {
            d2 = rhs.split('|').map(ring_element).collect::<Result<_>>()?;
        } else {
            return Err(Error::Parse(format!("unknown differential in {l:?}")));
        }
    }
    Ok((d1, d2))
}

impl Goldens {
    pub fn embedded() -> Result<Self> {
        Ok(Goldens {
            omega: parse_omega(OMEGA)?,
            tterms: parse_tterms(TTERMS)?,
            jtable: parse_jtable(JTABLE)?.1,
            cube: parse_cubetable(CUBETABLE)?,
            resolution: parse_resolution(RESOLUTION)?,
        })
    }

    /// Corrupts one entry.
    ///
    /// * `T<n>`: left-multiplies the first factor of row `n` by `y`;
    /// * `omega<n>`: swaps the first two entries of cycle term `n`;
    /// * `jtable:<r>:<c>`: toggles `v` in row `r`, column `c`;
    /// * `cubetable:<r>:<c>`: toggles `a` in row `r`, column `c`.
    ///
    /// Indices are 1-based.
    pub fn mutate(&mut self, name: &str) -> Result<()> {
        let unknown = || Error::UnknownMutation(name.to_string());
        let index = |s: &str, len: usize| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(n) if (1..=len).contains(&n) => Ok(n - 1),
                _ => Err(unknown()),
            }
        };
        if let Some(n) = name.strip_prefix("omega") {
            let i = index(n, self.omega.len())?;
            self.omega[i].1.swap(0, 1);
        } else if let Some(n) = name.strip_prefix('T') {
            let i = index(n, self.tterms.len())?;
            let f = &mut self.tterms[i].factors[0];
            *f = f.left_mul(&KleinElement::y());
        } else if let Some(rc) = name.strip_prefix("jtable:") {
            let (r, c) = rc.split_once(':').ok_or_else(unknown)?;
            let (r, c) = (index(r, self.jtable.len())?, index(c, 5)?);
            toggle(&mut self.jtable[r].1, 0, c);
        } else if let Some(rc) = name.strip_prefix("cubetable:") {
            let (r, c) = rc.split_once(':').ok_or_else(unknown)?;
            let (r, c) = (index(r, self.cube.action.len())?, index(c, self.cube.space.dim())?);
            toggle(&mut self.cube.action[r].1, 0, c);
        } else {
            return Err(unknown());
        }
        Ok(())
    }
}

fn toggle(m: &mut crate::f2::LinearMap, i: usize, j: usize) {
    let v = m.get(i, j) + Gf2::ONE;
    m.set(i, j, v);
}

/// Renders the fundamental cycle in the golden syntax.
pub fn render_omega(terms: &[SignedTuple]) -> String {
    terms
        .iter()
        .map(|(s, t)| format!("{}{}\n", if *s > 0 { '+' } else { '-' }, crate::parse::render_pair_tuple(t)))
        .collect()
}

/// Renders one factor in the golden syntax: `yx-y`, `1-y^2xbar`.
pub fn render_factor(r: &GroupRing<KleinElement, i64>) -> String {
    fn word(g: &KleinElement) -> String {
        let mut s = String::new();
        match g.y_exp() {
            0 => {}
            -1 => s.push_str("ybar"),
            1 => s.push('y'),
            n => s.push_str(&format!("y^{n}")),
        }
        match g.x_exp() {
            0 => {}
            -1 => s.push_str("xbar"),
            1 => s.push('x'),
            n => s.push_str(&format!("x^{n}")),
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
    // positive terms first, each group in normal-form order
    let mut terms: Vec<(&KleinElement, i64)> = r.terms().map(|(g, &c)| (g, c)).collect();
    terms.sort_by_key(|(g, c)| (*c < 0, g.is_identity(), **g));
    let mut out = String::new();
    for (i, (g, c)) in terms.into_iter().enumerate() {
        if c < 0 {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
            out.push('*');
        }
        out.push_str(&word(g));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn render_tterms(rows: &[TTerm]) -> String {
    rows.iter()
        .map(|t| {
            let f: Vec<String> = t.factors.iter().map(render_factor).collect();
            format!("{} {} : {}\n", t.label, if t.sign > 0 { '+' } else { '-' }, f.join(" | "))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_parse() {
        let g = Goldens::embedded().unwrap();
        assert_eq!(g.omega.len(), 24);
        assert_eq!(g.omega.iter().filter(|(s, _)| *s > 0).count(), 16);
        assert_eq!(g.tterms.len(), 24);
        assert_eq!(g.jtable.len(), 6);
        assert_eq!(g.cube.action.len(), 6);
        assert_eq!(g.cube.definitions.len(), 6);
        assert_eq!(g.resolution.0.len(), 2);
        assert_eq!(g.resolution.1.len(), 2);
    }

    #[test]
    fn same_as_rows_are_expanded() {
        let g = Goldens::embedded().unwrap();
        let y1 = &g.cube.action.iter().find(|(h, _)| *h == PairGenerator::Y1).unwrap().1;
        for h in [PairGenerator::Y2, PairGenerator::YBar1, PairGenerator::YBar2] {
            assert_eq!(&g.cube.action.iter().find(|(k, _)| *k == h).unwrap().1, y1);
        }
    }

    #[test]
    fn factors_render_back_to_source_syntax() {
        for line in content_lines(TTERMS) {
            let t = &parse_tterms(line).unwrap()[0];
            assert_eq!(render_tterms(std::slice::from_ref(t)).trim_end(), line);
        }
    }

    #[test]
    fn mutations_change_the_tables() {
        let clean = Goldens::embedded().unwrap();
        let mut g = clean.clone();
        g.mutate("T7").unwrap();
        assert_ne!(g.tterms[6], clean.tterms[6]);
        g.mutate("omega3").unwrap();
        assert_ne!(g.omega[2], clean.omega[2]);
        g.mutate("jtable:2:3").unwrap();
        assert_ne!(g.jtable[1], clean.jtable[1]);
        g.mutate("cubetable:1:1").unwrap();
        assert_ne!(g.cube.action[0], clean.cube.action[0]);
        for bad in ["T0", "T25", "omega", "jtable:7:1", "bogus"] {
            assert!(matches!(g.mutate(bad), Err(Error::UnknownMutation(_))), "{bad}");
        }
    }

    #[test]
    fn malformed_input_is_rejected() {
        assert!(parse_omega("[y1|x1]").is_err());
        assert!(parse_tterms("T1 + : y-1 | 1-y").is_err());
        assert!(parse_jtable("(x,1) | v").is_err());
    }
}
