//! Tokenizer shared by the line-oriented input formats and the expression grammar.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    Colon,
    Arrow,
    Comma,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Star,
    /// `*[` with no space in between: the star-generator marker.
    StarBracket,
    Plus,
    Minus,
    Slash,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    /// 1-based character column.
    pub column: usize,
}

pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Splits one line (comments already removed) into tokens.
pub fn tokenize(text: &str, line: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < chars.len() {
        let c = chars[pos];
        let column = pos + 1;
        if c.is_whitespace() {
            pos += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = pos;
            while pos < chars.len() && (chars[pos].is_ascii_alphanumeric() || chars[pos] == '_') {
                pos += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..pos].iter().collect()),
                column,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            out.push(Token {
                tok: Tok::Int(chars[start..pos].iter().collect()),
                column,
            });
            continue;
        }
        let (tok, width) = match c {
            ':' => (Tok::Colon, 1),
            ',' => (Tok::Comma, 1),
            '[' => (Tok::LBracket, 1),
            ']' => (Tok::RBracket, 1),
            '(' => (Tok::LParen, 1),
            ')' => (Tok::RParen, 1),
            '+' => (Tok::Plus, 1),
            '/' => (Tok::Slash, 1),
            '-' if chars.get(pos + 1) == Some(&'>') => (Tok::Arrow, 2),
            '-' => (Tok::Minus, 1),
            '*' if chars.get(pos + 1) == Some(&'[') => (Tok::StarBracket, 2),
            '*' => (Tok::Star, 1),
            other => return Err(syntax(line, column, format!("unexpected character `{other}`"))),
        };
        out.push(Token { tok, column });
        pos += width;
    }
    Ok(out)
}

/// Yields `(line_number, content)` for every non-blank line with `#` comments stripped.
pub fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let content = match raw.find('#') {
            Some(cut) => &raw[..cut],
            None => raw,
        };
        if content.trim().is_empty() {
            None
        } else {
            Some((idx + 1, content))
        }
    })
}

/// Cursor over the tokens of one line with helpers for the declarative formats.
pub struct LineCursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
    line_len: usize,
}

impl<'a> LineCursor<'a> {
    pub fn new(tokens: &'a [Token], line: usize, line_len: usize) -> Self {
        LineCursor {
            tokens,
            pos: 0,
            line,
            line_len,
        }
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map(|t| t.column).unwrap_or(self.line_len + 1)
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        syntax(self.line, self.column(), message)
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    pub fn keyword(&mut self, word: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == word => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(format!("expected `{word}`"))),
        }
    }

    pub fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    pub fn integer(&mut self, what: &str) -> Result<u64> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let value = s.parse().map_err(|_| self.error(format!("{what} too large")))?;
                self.pos += 1;
                Ok(value)
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    pub fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    /// One or more identifiers, stopping at the first non-identifier token.
    pub fn ident_list(&mut self, what: &str) -> Result<Vec<String>> {
        let mut out = Vec::new();
        while let Some(Tok::Ident(s)) = self.peek() {
            out.push(s.clone());
            self.pos += 1;
        }
        if out.is_empty() {
            return Err(self.error(format!("expected at least one {what}")));
        }
        Ok(out)
    }

    pub fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_bracket_is_one_token() {
        let toks = tokenize("h*[1,2] * h[1,1]", 1).unwrap();
        assert_eq!(toks[1].tok, Tok::StarBracket);
        assert_eq!(toks[6].tok, Tok::Star);
        assert_eq!(toks[6].column, 9);
    }

    #[test]
    fn reports_column_of_bad_char() {
        match tokenize("edge h: a $", 3) {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (3, 11)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn names() {
        assert!(is_valid_name("v_1"));
        assert!(is_valid_name("_x"));
        assert!(!is_valid_name("1v"));
        assert!(!is_valid_name(""));
        assert!(!is_valid_name("a-b"));
    }
}
