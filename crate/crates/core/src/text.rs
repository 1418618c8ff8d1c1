//! Text grammar for words and elements, and the canonical printers.
//!
//! ```text
//! element := rank ':' linear
//! rank    := 'F' INT | 'Finf'
//! linear  := ['+'|'-'] term (('+'|'-') term)*
//! term    := [coeff '*'] word | coeff
//! coeff   := rational | '(' rational ('+'|'-') rational 'i' ')'
//! word    := '1' | gen ('*' gen)*
//! gen     := 'g' INT ('^' SIGNED_INT)?
//! ```
//!
//! A direct sum is a `;`-separated list of elements, or `0`. A bare
//! coefficient stands for that multiple of the unit. Printing produces the
//! canonical form, which parses back to the same value.

use std::fmt;

use num_complex::Complex;
use num_traits::One;

use crate::algebra::{AlgebraElement, Tensor};
use crate::bialgebra::{DirectSumElement, GradedTensor};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::words::{PairWord, Rank, ReducedWord, Syllable};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
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

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected digits"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn uint<T: std::str::FromStr>(&mut self) -> Result<T> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Syntax { pos: start, msg: format!("integer {d} out of range") })
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let v: i64 = self.uint()?;
        Ok(if neg { -v } else { v })
    }

    fn rank(&mut self) -> Result<Rank> {
        self.skip_ws();
        let start = self.pos;
        if !self.eat_str("F") {
            return Err(self.error("expected rank such as 'F4'"));
        }
        if self.eat_str("inf") {
            return Ok(Rank::Infinite);
        }
        let n: u32 = self.uint()?;
        Rank::finite(n).map_err(|e| Error::Syntax { pos: start, msg: e.to_string() })
    }

    fn generator(&mut self, ambient: Rank) -> Result<Syllable> {
        self.skip_ws();
        let start = self.pos;
        if !self.eat_str("g") {
            return Err(self.error("expected generator such as 'g1'"));
        }
        let gen: u32 = self.uint()?;
        if gen == 0 || !ambient.admits(gen) {
            self.pos = start;
            return Err(Error::IndexOutOfRange { gen, ambient });
        }
        let exp = if self.eat('^') { self.signed_int()? } else { 1 };
        Ok(Syllable::new(gen, exp))
    }

    fn word(&mut self, ambient: Rank) -> Result<ReducedWord> {
        if self.peek() == Some('1') && !self.rest()[1..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
            return Ok(ReducedWord::identity(ambient));
        }
        let mut syllables = vec![self.generator(ambient)?];
        while self.peek() == Some('*') {
            self.pos += 1;
            syllables.push(self.generator(ambient)?);
        }
        ReducedWord::reduce(ambient, syllables)
    }

    /// `digits ('.' digits)? ('/' digits)?`
    fn rational<R: Real>(&mut self) -> Result<R> {
        let neg = self.eat('-');
        let start = self.pos;
        let mut value = self.integer::<R>()?;
        if self.rest().starts_with('.') {
            self.pos += 1;
            let frac = self.digits()?;
            let scale = num_traits::pow(R::from_u32(10).expect("small"), frac.len());
            value = value * scale.clone() + parse_real::<R>(frac, start)?;
            value = value / scale;
        }
        if self.eat('/') {
            let den = self.integer::<R>()?;
            if den.is_zero() {
                return Err(Error::Syntax { pos: start, msg: "zero denominator".into() });
            }
            value = value / den;
        }
        Ok(if neg { -value } else { value })
    }

    fn integer<R: Real>(&mut self) -> Result<R> {
        let start = self.pos;
        let d = self.digits()?;
        parse_real(d, start)
    }

    fn coefficient<R: Real>(&mut self) -> Result<Complex<R>> {
        if self.eat('(') {
            let re = self.rational::<R>()?;
            let neg = if self.eat('-') {
                true
            } else {
                self.expect('+')?;
                false
            };
            let im = self.rational::<R>()?;
            self.expect('i')?;
            self.expect(')')?;
            Ok(Complex::new(re, if neg { -im } else { im }))
        } else {
            Ok(Complex::new(self.rational::<R>()?, R::zero()))
        }
    }

    fn term<R: Real>(&mut self, ambient: Rank) -> Result<(Complex<R>, ReducedWord)> {
        match self.peek() {
            Some('g') => Ok((Complex::one(), self.word(ambient)?)),
            Some(c) if c == '(' || c.is_ascii_digit() => {
                let c = self.coefficient::<R>()?;
                if self.eat('*') {
                    Ok((c, self.word(ambient)?))
                } else {
                    Ok((c, ReducedWord::identity(ambient)))
                }
            }
            _ => Err(self.error("expected a term")),
        }
    }

    fn linear<R: Real>(&mut self, ambient: Rank) -> Result<AlgebraElement<R>> {
        let mut out = AlgebraElement::zero(ambient);
        let mut neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        loop {
            let (c, w) = self.term::<R>(ambient)?;
            out.add_term(w, if neg { -c } else { c })?;
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                return Ok(out);
            }
        }
    }

    fn element<R: Real>(&mut self) -> Result<AlgebraElement<R>> {
        let rank = self.rank()?;
        self.expect(':')?;
        self.linear(rank)
    }
}

fn parse_real<R: Real>(digits: &str, pos: usize) -> Result<R> {
    digits.parse::<R>().map_err(|_| Error::Syntax { pos, msg: format!("cannot read number {digits}") })
}

/// Parses a word in the given ambient rank.
pub fn parse_word(text: &str, ambient: Rank) -> Result<ReducedWord> {
    let mut c = Cursor::new(text);
    let w = c.word(ambient)?;
    c.finish()?;
    Ok(w)
}

/// Parses `"w1,w2"` as an element of `F_n × F_m`.
pub fn parse_pair(text: &str, first: Rank, second: Rank) -> Result<PairWord> {
    let mut c = Cursor::new(text);
    let a = c.word(first)?;
    c.expect(',')?;
    let b = c.word(second)?;
    c.finish()?;
    Ok(PairWord::new(a, b))
}

pub fn parse_algebra_element<R: Real>(text: &str) -> Result<AlgebraElement<R>> {
    let mut c = Cursor::new(text);
    let a = c.element()?;
    c.finish()?;
    Ok(a)
}

pub fn parse_direct_sum<R: Real>(text: &str) -> Result<DirectSumElement<R>> {
    let mut c = Cursor::new(text);
    if c.eat_str("0") && c.at_end() {
        return Ok(DirectSumElement::zero());
    }
    c.pos = 0;
    let mut out = DirectSumElement::zero();
    loop {
        let start = c.pos;
        let a = c.element::<R>()?;
        if a.ambient() == Rank::Infinite {
            return Err(Error::Syntax { pos: start, msg: "direct sum components need a finite rank".into() });
        }
        out.add_component(a)?;
        if !c.eat(';') {
            break;
        }
    }
    c.finish()?;
    Ok(out)
}

/// Parses a signed real literal such as `-3/4` or `2.5`.
pub fn parse_real_literal<R: Real>(text: &str) -> Result<R> {
    let mut c = Cursor::new(text);
    let v = c.rational::<R>()?;
    c.finish()?;
    Ok(v)
}

pub fn parse_scalar<R: Real>(text: &str) -> Result<Complex<R>> {
    let mut c = Cursor::new(text);
    let neg = c.eat('-');
    let v = c.coefficient::<R>()?;
    c.finish()?;
    Ok(if neg { -v } else { v })
}

/// Prints a coefficient in the grammar's `coeff` form.
pub fn format_scalar<R: Real>(c: &Complex<R>) -> String {
    if c.im.is_zero() {
        c.re.to_string()
    } else {
        format_complex(c)
    }
}

fn format_complex<R: Real>(c: &Complex<R>) -> String {
    let sign = if c.im.is_negative() { '-' } else { '+' };
    format!("({}{}{}i)", c.re, sign, c.im.abs())
}

/// Splits a coefficient into a leading sign and a magnitude; `None` means 1.
fn split_sign<R: Real>(c: &Complex<R>) -> (bool, Option<String>) {
    if !c.im.is_zero() {
        return (false, Some(format_complex(c)));
    }
    let neg = c.re.is_negative();
    let mag = c.re.abs();
    if mag.is_one() {
        (neg, None)
    } else {
        (neg, Some(mag.to_string()))
    }
}

fn write_linear<'a, L: 'a, R: Real + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (&'a L, &'a Complex<R>)>,
    mut label: impl FnMut(&L, bool) -> (String, bool),
) -> fmt::Result {
    let mut first = true;
    for (l, c) in terms {
        let (neg, mag) = split_sign(c);
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        let (text, is_unit) = label(l, mag.is_some());
        match mag {
            Some(m) if is_unit => f.write_str(&m)?,
            Some(m) => write!(f, "{m}*{text}")?,
            None => f.write_str(&text)?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl<R: Real> fmt::Display for AlgebraElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.ambient())?;
        write_linear(f, self.terms().iter(), |w: &ReducedWord, _| (w.to_string(), w.is_identity()))
    }
}

impl<R: Real> fmt::Display for DirectSumElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, a) in self.components().values().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

fn tensor_label<const K: usize>(words: &[ReducedWord; K], scaled: bool) -> (String, bool) {
    let body = words.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ⊗ ");
    (if scaled { format!("({body})") } else { body }, false)
}

fn write_rank_header<const K: usize>(f: &mut fmt::Formatter<'_>, ranks: &[Rank; K]) -> fmt::Result {
    let names = ranks.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("⊗");
    write!(f, "{names}: ")
}

impl<const K: usize, R: Real> fmt::Display for Tensor<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rank_header(f, &self.ambients())?;
        write_linear(f, self.terms().iter(), tensor_label::<K>)
    }
}

impl<const K: usize, R: Real> fmt::Display for GradedTensor<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, block) in self.components().values().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{block}")?;
        }
        Ok(())
    }
}
