//! Recursive-descent parser for the diagram syntax.
//!
//! ```text
//! expr     := 'on' '[' [INT (',' INT)*] ']' ':' [layer (';' layer)*]
//! layer    := atom ('|' atom)* | wide
//! atom     := 'id(' INT ')' | 'merge(' INT ',' INT ')'
//!           | 'split(' INT ',' INT ')' | 'cross(' INT ',' INT ')'
//! wide     := 'E(' INT ',' INT ')' | 'F(' INT ',' INT ')' | 'X(' INT ')' | 'Y(' INT ')'
//! combo    := ['-'] term (('+' | '-') term)*
//! term     := [INT ['/' INT] '*'] expr
//! zero     := '0' '*' 'on' '[' ... ']' '->' '[' ... ']' ':'
//! ```
//!
//! An expression with no layers is the identity on its boundary. Positions
//! in syntax errors are 0-based character offsets.

use num_traits::{One, Zero};

use super::{Atom, Layer, SpiderDiagram, SpiderExpr};
use crate::linear::{parse_rational, Rational};
use crate::{Error, Result};

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn error(&mut self, message: String) -> Error {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".into(),
        };
        Error::syntax(self.pos, format!("{message}, found {found}"))
    }

    fn ident(&mut self) -> Result<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a generator name".into()));
        }
        Ok((start, self.chars[start..self.pos].iter().collect()))
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer".into()));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn int(&mut self) -> Result<i64> {
        let negative = self.eat('-');
        let start = self.pos;
        let text = self.digits()?;
        let value: i64 = text.parse().map_err(|_| Error::syntax(start, "integer out of range"))?;
        Ok(if negative { -value } else { value })
    }

    fn index(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let value = self.int()?;
        usize::try_from(value).map_err(|_| Error::syntax(start, "expected a nonnegative integer"))
    }

    fn args2(&mut self) -> Result<(i64, i64)> {
        self.expect('(')?;
        let a = self.int()?;
        self.expect(',')?;
        let b = self.int()?;
        self.expect(')')?;
        Ok((a, b))
    }

    fn wide_args2(&mut self) -> Result<(usize, usize)> {
        self.expect('(')?;
        let a = self.index()?;
        self.expect(',')?;
        let b = self.index()?;
        self.expect(')')?;
        Ok((a, b))
    }

    fn wide_args1(&mut self) -> Result<usize> {
        self.expect('(')?;
        let a = self.index()?;
        self.expect(')')?;
        Ok(a)
    }

    fn layer(&mut self) -> Result<Layer> {
        let mut atoms = Vec::new();
        loop {
            let (start, name) = self.ident()?;
            let wide = match name.as_str() {
                "E" => Some(self.wide_args2().map(|(i, r)| Layer::E(i, r))?),
                "F" => Some(self.wide_args2().map(|(i, r)| Layer::F(i, r))?),
                "X" => Some(Layer::X(self.wide_args1()?)),
                "Y" => Some(Layer::Y(self.wide_args1()?)),
                _ => None,
            };
            if let Some(wide) = wide {
                if !atoms.is_empty() || self.peek() == Some('|') {
                    return Err(Error::syntax(start, format!("{name} fills a whole layer and cannot be combined with '|'")));
                }
                return Ok(wide);
            }
            let atom = match name.as_str() {
                "id" => {
                    self.expect('(')?;
                    let k = self.int()?;
                    self.expect(')')?;
                    Atom::Id(k)
                }
                "merge" => self.args2().map(|(k, l)| Atom::Merge(k, l))?,
                "split" => self.args2().map(|(k, l)| Atom::Split(k, l))?,
                "cross" => self.args2().map(|(k, l)| Atom::Cross(k, l))?,
                other => return Err(Error::syntax(start, format!("unknown generator '{other}'"))),
            };
            atoms.push(atom);
            if !self.eat('|') {
                return Ok(Layer::Local(atoms));
            }
        }
    }

    fn diagram(&mut self) -> Result<SpiderDiagram> {
        let (start, word) = self.ident().map_err(|_| self.error("expected 'on'".into()))?;
        if word != "on" {
            return Err(Error::syntax(start, format!("expected 'on', found '{word}'")));
        }
        let bottom = self.boundary()?;
        self.expect(':')?;
        let mut layers = Vec::new();
        if self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            layers.push(self.layer()?);
            while self.eat(';') {
                layers.push(self.layer()?);
            }
        }
        SpiderDiagram::new(bottom, layers)
    }

    fn boundary(&mut self) -> Result<Vec<i64>> {
        self.expect('[')?;
        let mut labels = Vec::new();
        if !self.eat(']') {
            loop {
                labels.push(self.int()?);
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Ok(labels)
    }

    /// The zero morphism between distinct boundaries, `on [b] -> [t]:`.
    /// Leaves the position untouched when the input has a different shape.
    fn zero_between(&mut self) -> Result<Option<SpiderExpr>> {
        let saved = self.pos;
        let bottom = match self.ident() {
            Ok((_, w)) if w == "on" => self.boundary()?,
            _ => {
                self.pos = saved;
                return Ok(None);
            }
        };
        if !self.eat('-') {
            self.pos = saved;
            return Ok(None);
        }
        self.expect('>')?;
        let top = self.boundary()?;
        self.expect(':')?;
        Ok(Some(SpiderExpr::zero(bottom, top)))
    }

    fn coefficient(&mut self) -> Result<Rational> {
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Ok(Rational::one());
        }
        let start = self.pos;
        let mut text = self.digits()?;
        if self.eat('/') {
            text.push('/');
            text.push_str(&self.digits()?);
        }
        let value = parse_rational(&text).map_err(|e| Error::syntax(start, e.to_string()))?;
        self.expect('*')?;
        Ok(value)
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input".into()))
        }
    }
}

/// Parses a single diagram.
pub fn parse(text: &str) -> Result<SpiderExpr> {
    let mut p = Parser::new(text);
    let d = p.diagram()?;
    p.finish()?;
    Ok(SpiderExpr::from_diagram(d))
}

/// Parses a linear combination `a/b * <expr> + …` of diagrams with common
/// boundaries.
pub fn parse_combination(text: &str) -> Result<SpiderExpr> {
    let mut p = Parser::new(text);
    let mut sign = if p.eat('-') { -Rational::one() } else { Rational::one() };
    let mut acc: Option<SpiderExpr> = None;
    loop {
        let coeff = p.coefficient()? * &sign;
        let start = p.pos;
        let zero = if coeff.is_zero() { p.zero_between()? } else { None };
        let term = match zero {
            Some(z) => z,
            None => SpiderExpr::term(coeff, p.diagram()?),
        };
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term).map_err(|e| match e {
                Error::Boundary(m) => Error::Boundary(format!("term at position {start}: {m}")),
                other => other,
            })?,
        });
        if p.eat('+') {
            sign = Rational::one();
        } else if p.eat('-') {
            sign = -Rational::one();
        } else {
            break;
        }
    }
    p.finish()?;
    Ok(acc.expect("at least one term"))
}
