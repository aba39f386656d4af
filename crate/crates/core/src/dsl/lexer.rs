use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

/// One statement: its tokens plus the position where it starts (for errors at the tail).
#[derive(Clone, Debug)]
pub struct Statement {
    pub tokens: Vec<Token>,
    pub line: usize,
    pub end_column: usize,
}

impl Statement {
    pub fn error_at(&self, idx: usize, message: impl Into<String>) -> Error {
        let (line, column) = match self.tokens.get(idx) {
            Some(t) => (t.line, t.column),
            None => (self.line, self.end_column),
        };
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

/// Splits text into statements of tokens. Lines and columns are 1-based.
pub fn statements(text: &str) -> Result<Vec<Statement>> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let chars: Vec<char> = content.chars().collect();
        let mut cur = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c == ';' {
                if !cur.is_empty() {
                    out.push(Statement {
                        tokens: std::mem::take(&mut cur),
                        line,
                        end_column: column,
                    });
                }
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                cur.push(Token {
                    tok: Tok::Int(s.parse().expect("digits")),
                    line,
                    column,
                });
            } else if is_ident_start(c) {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                cur.push(Token {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    line,
                    column,
                });
            } else if "+-*/^()=|:".contains(c) {
                cur.push(Token {
                    tok: Tok::Sym(c),
                    line,
                    column,
                });
                i += 1;
            } else {
                return Err(Error::Syntax {
                    line,
                    column,
                    message: format!("unexpected character '{c}'"),
                });
            }
        }
        if !cur.is_empty() {
            out.push(Statement {
                tokens: cur,
                line,
                end_column: chars.len() + 1,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_on_semicolons_and_comments() {
        let s = statements("generators x y; N 2 # trailing\nrelation x*y - y*x").unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s[2].tokens.len(), 8);
        assert_eq!(s[2].line, 2);
    }

    #[test]
    fn rejects_stray_characters() {
        let e = statements("relation x & y").unwrap_err();
        assert_eq!(
            e,
            Error::Syntax {
                line: 1,
                column: 12,
                message: "unexpected character '&'".into()
            }
        );
    }
}
