//! Inline construction expressions.
//!
//! Grammar, with arbitrary whitespace between tokens:
//!
//! ```text
//! expr := U(m, n)            uniform matroid on ids 1..=n
//!       | G(path)            matroid JSON loaded from a file
//!       | sum(expr, expr)    direct sum
//!       | P(expr, expr; e)   parallel connection at basepoint e
//!       | S(expr, expr; e)   series connection at basepoint e
//! ```
//!
//! The right operand is relabeled before combining: for `sum` every id
//! clashing with the left side moves to a fresh id above everything in
//! use, for `P`/`S` the basepoint stays put and only clashing non-basepoint
//! ids move.  So `P(U(2,3), U(2,3); 3)` glues two triangles along element 3
//! and the second triangle ends up on {3, 4, 5}.

use std::collections::BTreeMap;

use bcckit::constructions::{
    direct_sum, parallel_connection, series_connection, ConnectionSpec,
};
use bcckit::elements::{ElemSet, Element};
use bcckit::error::Error;
use bcckit::matroid::Matroid;

pub fn parse(input: &str) -> Result<Matroid, Error> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    let m = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.fail("trailing input after expression"));
    }
    Ok(m)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail(&self, what: &str) -> Error {
        Error::Schema(format!("expression: {what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> Result<(), Error> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(&format!("expected '{}'", c as char)))
        }
    }

    fn word(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn number(&mut self) -> Result<u32, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail("expected a number"));
        }
        String::from_utf8_lossy(&self.src[start..self.pos])
            .parse()
            .map_err(|_| self.fail("number out of range"))
    }

    /// Everything up to the closing parenthesis, trimmed; file paths may
    /// contain anything except ')'.
    fn path(&mut self) -> Result<String, Error> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|&c| c != b')') {
            self.pos += 1;
        }
        if self.pos == self.src.len() {
            return Err(self.fail("unterminated path"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos])
            .trim()
            .to_string())
    }

    fn expr(&mut self) -> Result<Matroid, Error> {
        let head = self.word();
        match head.as_str() {
            "U" => {
                self.eat(b'(')?;
                let m = self.number()?;
                self.eat(b',')?;
                let n = self.number()?;
                self.eat(b')')?;
                Matroid::uniform(m as usize, n as usize)
            }
            "G" => {
                self.eat(b'(')?;
                let path = self.path()?;
                self.eat(b')')?;
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Schema(format!("cannot read {path}: {e}")))?;
                Matroid::from_json_str(&text)
            }
            "sum" => {
                self.eat(b'(')?;
                let left = self.expr()?;
                self.eat(b',')?;
                let right = self.expr()?;
                self.eat(b')')?;
                let right = relabel_clashes(&right, left.ground(), None)?;
                direct_sum(&left, &right)
            }
            "P" | "S" => {
                self.eat(b'(')?;
                let left = self.expr()?;
                self.eat(b',')?;
                let right = self.expr()?;
                self.eat(b';')?;
                let e = Element(self.number()?);
                self.eat(b')')?;
                for side in [&left, &right] {
                    if !side.ground().contains(e) {
                        return Err(Error::Schema(format!(
                            "basepoint {e} is not in both operands"
                        )));
                    }
                }
                let right = relabel_clashes(&right, left.ground(), Some(e))?;
                let spec = ConnectionSpec::new(left, right, e)?;
                if head == "P" {
                    parallel_connection(&spec)
                } else {
                    series_connection(&spec)
                }
            }
            "" => Err(self.fail("expected U, G, sum, P, or S")),
            other => Err(self.fail(&format!("unknown constructor '{other}'"))),
        }
    }
}

/// Moves ids of `m` that clash with `taken` (except `keep`) to fresh ids
/// above everything either side uses.
fn relabel_clashes(m: &Matroid, taken: ElemSet, keep: Option<Element>) -> Result<Matroid, Error> {
    let mut next = taken
        .union(m.ground())
        .ids()
        .into_iter()
        .max()
        .unwrap_or(0)
        + 1;
    let mut map = BTreeMap::new();
    for e in m.ground_elems() {
        if Some(e) == keep || !taken.contains(e) {
            map.insert(e, e);
        } else {
            map.insert(e, Element(next));
            next += 1;
        }
    }
    m.relabeled(&map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_and_nesting() {
        let m = parse("U(2, 4)").unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(m.rank_full(), 2);

        let glued = parse("P(U(2,3), U(2,3); 3)").unwrap();
        assert_eq!(glued.ground().ids(), vec![1, 2, 3, 4, 5]);
        assert_eq!(glued.rank_full(), 3);

        let chain = parse("P(P(U(2,3),U(2,3);3), U(2,3); 1)").unwrap();
        assert_eq!(chain.size(), 7);
    }

    #[test]
    fn sum_relabels_the_right_side() {
        let m = parse("sum(U(1,2), U(1,2))").unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(m.components().len(), 2);
    }

    #[test]
    fn series_connection_parses() {
        let m = parse("S(U(2,3), U(2,3); 2)").unwrap();
        assert_eq!(m.size(), 5);
        // series connection of two triangles at a point: rank r1 + r2
        assert_eq!(m.rank_full(), 4);
    }

    #[test]
    fn errors_are_schema_errors() {
        for bad in [
            "U(2,3",
            "U(2,3) junk",
            "wheel(4)",
            "P(U(2,3), U(2,3); 9)",
            "",
            "G(/no/such/file)",
        ] {
            assert!(
                matches!(parse(bad), Err(Error::Schema(_))),
                "{bad:?} should be a schema error"
            );
        }
    }

    #[test]
    fn whitespace_is_free() {
        let m = parse("  P ( U(2,3) , U(2,3) ; 3 )  ").unwrap();
        assert_eq!(m.size(), 5);
    }
}
