//! Text syntax for Klein group words, integral group-ring expressions and
//! bar symbols on `pi x pi`.
//!
//! Words juxtapose the letters `y`, `x`, `ybar`, `xbar`, each with an
//! optional integer exponent `^n`; `*` separators and the word `1` are also
//! accepted, so both `y^2xbar` and `y^-1*x^3` parse.

use crate::error::{Error, Result};
use crate::group::{Group, KleinElement, Pair};
use crate::ring::GroupRing;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn digits(&mut self) -> Option<i64> {
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let n = self.rest()[..len].parse().ok()?;
        self.pos += len;
        Some(n)
    }

    fn exponent(&mut self) -> Result<i64> {
        if !self.eat("^") {
            return Ok(1);
        }
        let neg = self.eat("-");
        let n = self.digits().ok_or_else(|| self.error("expected an exponent"))?;
        Ok(if neg { -n } else { n })
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }
}

/// Parses one letter with its exponent, if the cursor is on a letter.
fn letter(cur: &mut Cursor<'_>) -> Result<Option<KleinElement>> {
    let base = if cur.eat("ybar") {
        KleinElement::y().inv()
    } else if cur.eat("xbar") {
        KleinElement::x().inv()
    } else if cur.eat("y") {
        KleinElement::y()
    } else if cur.eat("x") {
        KleinElement::x()
    } else {
        return Ok(None);
    };
    let e = cur.exponent()?;
    Ok(Some(base.pow(e)))
}

fn word(cur: &mut Cursor<'_>) -> Result<Option<KleinElement>> {
    let mut acc: Option<KleinElement> = None;
    loop {
        let save = cur.pos;
        if acc.is_some() {
            cur.eat("*");
        }
        match letter(cur)? {
            Some(g) => acc = Some(acc.unwrap_or_else(KleinElement::identity).mul(&g)),
            None => {
                cur.pos = save;
                return Ok(acc);
            }
        }
    }
}

/// Parses a Klein group word such as `y^2xbar` or `1`.
pub fn klein_element(s: &str) -> Result<KleinElement> {
    let mut cur = Cursor::new(s.trim());
    let g = if cur.eat("1") { KleinElement::identity() } else { word(&mut cur)?.ok_or_else(|| cur.error("expected a word"))? };
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(g)
}

/// Parses a signed sum of monomials such as `y^2x - yx` or `-1 + 2*y*x`.
pub fn ring_element(s: &str) -> Result<GroupRing<KleinElement, i64>> {
    let mut cur = Cursor::new(s);
    let mut out = GroupRing::zero();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.at_end() {
            break;
        }
        let sign = if cur.eat("+") {
            1
        } else if cur.eat("-") {
            -1
        } else if first {
            1
        } else {
            return Err(cur.error("expected + or -"));
        };
        first = false;
        cur.skip_ws();
        let coeff = cur.digits();
        if coeff.is_some() {
            cur.eat("*");
        }
        let g = word(&mut cur)?;
        if coeff.is_none() && g.is_none() {
            return Err(cur.error("expected a term"));
        }
        out.add_term(g.unwrap_or_else(KleinElement::identity), sign * coeff.unwrap_or(1));
    }
    if first {
        return Err(cur.error("empty expression"));
    }
    Ok(out)
}

/// Parses a pair in slot shorthand: letters tagged with `1` or `2` for the
/// factor they live in, e.g. `y1`, `y2x2`, `ybar1`, `1`.
pub fn klein_pair(s: &str) -> Result<Pair<KleinElement>> {
    let mut cur = Cursor::new(s.trim());
    if cur.eat("1") && cur.at_end() {
        return Ok(Pair::identity());
    }
    cur.pos = 0;
    let mut acc = Pair::<KleinElement>::identity();
    while !cur.at_end() {
        cur.eat("*");
        let base = if cur.eat("ybar") {
            KleinElement::y().inv()
        } else if cur.eat("xbar") {
            KleinElement::x().inv()
        } else if cur.eat("y") {
            KleinElement::y()
        } else if cur.eat("x") {
            KleinElement::x()
        } else {
            return Err(cur.error("expected a slot letter"));
        };
        let p = match cur.peek() {
            Some('1') => Pair::first(base),
            Some('2') => Pair::second(base),
            _ => return Err(cur.error("expected slot 1 or 2")),
        };
        cur.pos += 1;
        let e = cur.exponent()?;
        acc = acc.mul(&p.pow(e));
    }
    Ok(acc)
}

/// Parses a bar symbol `[y1|x1|y2x2|y2]` over `pi x pi`.
pub fn pair_tuple(s: &str) -> Result<Vec<Pair<KleinElement>>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [..] around {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split('|').map(klein_pair).collect()
}

/// Renders a pair in slot shorthand, the inverse of [`klein_pair`] on
/// pairs whose factors are words in `y` and `x`.
pub fn render_pair(p: &Pair<KleinElement>) -> String {
    fn slot(g: &KleinElement, tag: char) -> String {
        let mut s = String::new();
        for (letter, e) in [("y", g.y_exp()), ("x", g.x_exp())] {
            match e {
                0 => {}
                1 => s.push_str(&format!("{letter}{tag}")),
                _ => s.push_str(&format!("{letter}{tag}^{e}")),
            }
        }
        s
    }
    let s = format!("{}{}", slot(&p.left, '1'), slot(&p.right, '2'));
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

pub fn render_pair_tuple(t: &[Pair<KleinElement>]) -> String {
    let parts: Vec<String> = t.iter().map(render_pair).collect();
    format!("[{}]", parts.join("|"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(b: i64, a: i64) -> KleinElement {
        KleinElement::new(b, a)
    }

    #[test]
    fn words() {
        assert_eq!(klein_element("y^2xbar").unwrap(), k(2, -1));
        assert_eq!(klein_element("yxbar").unwrap(), k(1, -1));
        assert_eq!(klein_element("ybar").unwrap(), k(-1, 0));
        assert_eq!(klein_element("1").unwrap(), k(0, 0));
        assert_eq!(klein_element("y^-1*x^3").unwrap(), k(-1, 3));
        // x y = y^-1 x
        assert_eq!(klein_element("xy").unwrap(), k(-1, 1));
        assert!(klein_element("yz").is_err());
        assert!(klein_element("").is_err());
    }

    #[test]
    fn ring_expressions() {
        let r = ring_element("y^2x-yx").unwrap();
        assert_eq!(r, GroupRing::from_terms([(k(2, 1), 1), (k(1, 1), -1)]));
        assert_eq!(ring_element("1 - y^2xbar").unwrap(), GroupRing::from_terms([(k(0, 0), 1), (k(2, -1), -1)]));
        assert_eq!(ring_element("-1 + 2*y*x").unwrap(), GroupRing::from_terms([(k(0, 0), -1), (k(1, 1), 2)]));
        assert!(ring_element("y x").is_err());
        assert!(ring_element("").is_err());
    }

    #[test]
    fn display_round_trips_through_the_parser() {
        let r = GroupRing::from_terms([(k(-1, 3), -2), (k(4, -1), 1), (k(0, 0), 3)]);
        assert_eq!(ring_element(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn pair_shorthand() {
        assert_eq!(klein_pair("y1").unwrap(), Pair::first(KleinElement::y()));
        assert_eq!(klein_pair("y2x2").unwrap(), Pair::second(k(1, 1)));
        assert_eq!(klein_pair("y1x1").unwrap(), Pair::first(k(1, 1)));
        assert_eq!(klein_pair("1").unwrap(), Pair::identity());
        assert!(klein_pair("y3").is_err());
        let t = pair_tuple("[y1|x1|y2x2|y2]").unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(render_pair_tuple(&t), "[y1|x1|y2x2|y2]");
    }
}
