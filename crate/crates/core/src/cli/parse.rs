//! The input document format.
//!
//! ```text
//! quat  := a ('+'|'-') b 'i' ('+'|'-') c 'j' ('+'|'-') d 'k' | a
//! dq    := 'dq' '{' 'std' ':' quat ',' 'inf' ':' quat '}'
//! vec   := 'vec' '[' dq (',' dq)* ']'
//! basis := 'basis' '[' vec (',' vec)* ']'
//! ```
//!
//! Whitespace is insignificant. Real literals are decimal with an optional
//! exponent; `inf`, `nan` and literals that overflow `f64` are rejected.

use std::fmt;

use thiserror::Error;

use crate::dq_vector::DQVector;
use crate::dual_quaternion::DualQuaternion;
use crate::quaternion::Quaternion;

#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Scalar(DualQuaternion),
    Vector(DQVector),
    Basis(Vec<DQVector>),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Scalar(_) => "scalar",
            Document::Vector(_) => "vector",
            Document::Basis(_) => "basis",
        }
    }

    /// Renders the document in the input grammar. Parsing the result gives
    /// back an identical document.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn write_dq(f: &mut fmt::Formatter<'_>, q: &DualQuaternion) -> fmt::Result {
    write!(f, "dq{{std: {}, inf: {}}}", q.std_part(), q.inf_part())
}

fn write_vec(f: &mut fmt::Formatter<'_>, v: &DQVector) -> fmt::Result {
    f.write_str("vec[")?;
    for (i, e) in v.entries().iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write_dq(f, e)?;
    }
    f.write_str("]")
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Document::Scalar(q) => write_dq(f, q),
            Document::Vector(v) => write_vec(f, v),
            Document::Basis(vs) => {
                f.write_str("basis[")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write_vec(f, v)?;
                }
                f.write_str("]")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    NonFinite,
    EmptyVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {}", match kind {
    ParseErrorKind::Syntax(msg) => msg.clone(),
    ParseErrorKind::NonFinite => "non-finite number".to_string(),
    ParseErrorKind::EmptyVector => "empty vector".to_string(),
})]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    /// Literal text; converted to `f64` by the parser so errors can point
    /// at it.
    Number(String),
    Word(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Number(s) => write!(f, "number `{s}`"),
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(char::is_ascii_digit)) {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '.' {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    i = j;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
            }
            Tok::Number(chars[start..i].iter().collect())
        } else if c.is_alphabetic() {
            while i < chars.len() && chars[i].is_alphanumeric() {
                i += 1;
            }
            Tok::Word(chars[start..i].iter().collect())
        } else if "+-{}[]:,".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(ParseError {
                kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
                line,
                column: col,
            });
        };
        out.push(Token { tok, line, column: col });
        col += i - start;
    }
    out.push(Token { tok: Tok::Eof, line, column: col });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Token, kind: ParseErrorKind) -> ParseError {
        ParseError { kind, line: t.line, column: t.column }
    }

    fn unexpected(t: &Token, wanted: &str) -> ParseError {
        Self::error_at(t, ParseErrorKind::Syntax(format!("expected {wanted}, found {}", t.tok)))
    }

    fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        let t = self.next();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            Err(Self::unexpected(&t, &format!("`{c}`")))
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<(), ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Word(got) if got == w => Ok(()),
            _ => Err(Self::unexpected(&t, &format!("`{w}`"))),
        }
    }

    fn number(&mut self) -> Result<f64, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Number(s) => {
                let v: f64 = s
                    .parse()
                    .map_err(|_| Self::error_at(&t, ParseErrorKind::Syntax(format!("bad number `{s}`"))))?;
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(Self::error_at(&t, ParseErrorKind::NonFinite))
                }
            }
            Tok::Word(w) if is_non_finite_word(w) => Err(Self::error_at(&t, ParseErrorKind::NonFinite)),
            _ => Err(Self::unexpected(&t, "a number")),
        }
    }

    fn signed_number(&mut self) -> Result<f64, ParseError> {
        let sign = self.sign().unwrap_or(1.0);
        Ok(sign * self.number()?)
    }

    fn sign(&mut self) -> Option<f64> {
        let s = match self.peek().tok {
            Tok::Sym('+') => 1.0,
            Tok::Sym('-') => -1.0,
            _ => return None,
        };
        self.next();
        Some(s)
    }

    fn quat(&mut self) -> Result<Quaternion, ParseError> {
        let start = self.peek().clone();
        let w = self.signed_number()?;
        let mut c = [w, 0.0, 0.0, 0.0];
        if self.sign_ahead() {
            for (k, unit) in ["i", "j", "k"].into_iter().enumerate() {
                let t = self.peek().clone();
                let s = self.sign().ok_or_else(|| Self::unexpected(&t, "`+` or `-`"))?;
                c[k + 1] = s * self.number()?;
                self.expect_word(unit)?;
            }
        }
        Quaternion::from_components(c).map_err(|_| Self::error_at(&start, ParseErrorKind::NonFinite))
    }

    fn sign_ahead(&self) -> bool {
        matches!(self.peek().tok, Tok::Sym('+') | Tok::Sym('-'))
    }

    fn dq(&mut self) -> Result<DualQuaternion, ParseError> {
        self.expect_word("dq")?;
        self.expect_sym('{')?;
        self.expect_word("std")?;
        self.expect_sym(':')?;
        let st = self.quat()?;
        self.expect_sym(',')?;
        self.expect_word("inf")?;
        self.expect_sym(':')?;
        let inf = self.quat()?;
        self.expect_sym('}')?;
        Ok(DualQuaternion::new(st, inf))
    }

    /// `open item (',' item)* ']'`, at least one item.
    fn list<T>(&mut self, item: impl Fn(&mut Self) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
        let open = self.peek().clone();
        self.expect_sym('[')?;
        if self.peek().tok == Tok::Sym(']') {
            return Err(Self::error_at(&open, ParseErrorKind::EmptyVector));
        }
        let mut items = vec![item(self)?];
        loop {
            let t = self.next();
            match t.tok {
                Tok::Sym(',') => items.push(item(self)?),
                Tok::Sym(']') => return Ok(items),
                _ => return Err(Self::unexpected(&t, "`,` or `]`")),
            }
        }
    }

    fn vector(&mut self) -> Result<DQVector, ParseError> {
        self.expect_word("vec")?;
        let entries = self.list(Self::dq)?;
        Ok(DQVector::new(entries).expect("list is nonempty"))
    }

    fn document(&mut self) -> Result<Document, ParseError> {
        let t = self.peek().clone();
        let doc = match &t.tok {
            Tok::Word(w) if w == "dq" => Document::Scalar(self.dq()?),
            Tok::Word(w) if w == "vec" => Document::Vector(self.vector()?),
            Tok::Word(w) if w == "basis" => {
                self.next();
                Document::Basis(self.list(Self::vector)?)
            }
            _ => return Err(Self::unexpected(&t, "`dq`, `vec` or `basis`")),
        };
        let end = self.next();
        if end.tok != Tok::Eof {
            return Err(Self::unexpected(&end, "end of input"));
        }
        Ok(doc)
    }
}

fn is_non_finite_word(w: &str) -> bool {
    matches!(w.to_ascii_lowercase().as_str(), "inf" | "infinity" | "nan")
}

pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    Parser { tokens: lex(text)?, pos: 0 }.document()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Quaternion as Q;

    #[test]
    fn scalar_literal() {
        let doc = parse_document("dq{ std: 1 + 0i + 0j + 0k, inf: 0 + 1i + 0j + 0k }").unwrap();
        assert_eq!(doc, Document::Scalar(DualQuaternion::new(Q::ONE, Q::I)));
    }

    #[test]
    fn vector_literal() {
        let doc = parse_document("vec[ dq{std: 1+0i+0j+0k, inf: 0}, dq{std: 0+1i+0j+0k, inf: 0} ]").unwrap();
        let expected = DQVector::from_parts(&[Q::ONE, Q::I], &[Q::ZERO, Q::ZERO]).unwrap();
        assert_eq!(doc, Document::Vector(expected));
    }

    #[test]
    fn basis_literal() {
        let doc = parse_document(
            "basis[vec[dq{std: 1, inf: 0}, dq{std: 0, inf: 0}],\n vec[dq{std: 0, inf: 0}, dq{std: 1, inf: 0}]]",
        )
        .unwrap();
        let e = |i| DQVector::unit(2, i).unwrap();
        assert_eq!(doc, Document::Basis(vec![e(0), e(1)]));
    }

    #[test]
    fn signs_and_exponents() {
        let doc = parse_document("dq{std: -1.5e-3 - 2i + .5j - 4E2k, inf: -7}").unwrap();
        assert_eq!(
            doc,
            Document::Scalar(DualQuaternion::new(Q::new(-1.5e-3, -2.0, 0.5, -400.0), Q::real(-7.0)))
        );
    }

    #[test]
    fn rejects_overflowing_literal() {
        let err = parse_document("dq{ std: 1e999, inf: 0 }").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NonFinite);
        assert_eq!((err.line, err.column), (1, 10));
    }

    #[test]
    fn rejects_inf_and_nan_words() {
        for text in ["dq{std: nan, inf: 0}", "dq{std: 1, inf: inf}", "dq{std: 1 + infi + 0j + 0k, inf: 0}"] {
            let err = parse_document(text).unwrap_err();
            assert!(
                matches!(err.kind, ParseErrorKind::NonFinite | ParseErrorKind::Syntax(_)),
                "{text}: {err}"
            );
        }
        assert_eq!(parse_document("dq{std: nan, inf: 0}").unwrap_err().kind, ParseErrorKind::NonFinite);
        assert_eq!(parse_document("dq{std: 0, inf: inf}").unwrap_err().kind, ParseErrorKind::NonFinite);
    }

    #[test]
    fn rejects_empty_vector() {
        let err = parse_document("vec[]").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::EmptyVector);
        assert_eq!(parse_document("basis[ ]").unwrap_err().kind, ParseErrorKind::EmptyVector);
    }

    #[test]
    fn reports_positions() {
        let err = parse_document("dq{std: 1,\n  inf 0}").unwrap_err();
        assert_eq!((err.line, err.column), (2, 7));
        assert_eq!(err.to_string(), "2:7: expected `:`, found number `0`");
        let err = parse_document("dq{std: 1 + 2i, inf: 0}").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
        let err = parse_document("dq{std: 1, inf: 0} extra").unwrap_err();
        assert_eq!((err.line, err.column), (1, 20));
        assert!(parse_document("dq{std: 1, inf: 0} #").is_err());
    }

    fn finite() -> impl Strategy<Value = f64> {
        prop_oneof![
            -1e6..1e6f64,
            any::<f64>().prop_filter("finite", |x| x.is_finite()),
            Just(0.0),
            Just(-0.0),
        ]
    }

    fn dq() -> impl Strategy<Value = DualQuaternion> {
        proptest::array::uniform8(finite()).prop_map(|c| {
            DualQuaternion::new(Q::new(c[0], c[1], c[2], c[3]), Q::new(c[4], c[5], c[6], c[7]))
        })
    }

    fn vector() -> impl Strategy<Value = DQVector> {
        proptest::collection::vec(dq(), 1..5).prop_map(|e| DQVector::new(e).unwrap())
    }

    fn document() -> impl Strategy<Value = Document> {
        prop_oneof![
            dq().prop_map(Document::Scalar),
            vector().prop_map(Document::Vector),
            proptest::collection::vec(vector(), 1..4).prop_map(Document::Basis),
        ]
    }

    proptest! {
        #[test]
        fn render_then_parse_is_identity(doc in document()) {
            prop_assert_eq!(parse_document(&doc.render()).unwrap(), doc);
        }
    }
}
