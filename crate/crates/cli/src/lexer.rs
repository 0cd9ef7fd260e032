//! Tokens with source positions.

use std::fmt;

use crate::error::ParseError;

/// 1-based line and column, columns counted in characters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Eof,
}

impl Tok {
    /// How the token is named in "expected ..." lists.
    pub fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer {s}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Comma => "','".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

/// Splits `src` into tokens. `−` is read as `-` and `⊗` as `*`.
pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut pos = Pos { line: 1, col: 1 };
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let start = pos;
        if ch == '\n' {
            chars.next();
            pos.line += 1;
            pos.col = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            pos.col += 1;
            continue;
        }
        let single = match ch {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' | '\u{2297}' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            ',' => Some(Tok::Comma),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            pos.col += 1;
            out.push(Token { tok, pos: start });
            continue;
        }
        let mut word = String::new();
        if ch.is_ascii_digit() {
            while let Some(&c) = chars.peek().filter(|c| c.is_ascii_digit()) {
                word.push(c);
                chars.next();
                pos.col += 1;
            }
            out.push(Token { tok: Tok::Int(word), pos: start });
        } else if ch.is_alphabetic() || ch == '_' {
            while let Some(&c) = chars.peek().filter(|c| c.is_alphanumeric() || **c == '_') {
                word.push(c);
                chars.next();
                pos.col += 1;
            }
            out.push(Token { tok: Tok::Ident(word), pos: start });
        } else {
            return Err(ParseError::UnexpectedChar { ch, pos: start });
        }
    }
    out.push(Token { tok: Tok::Eof, pos });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_track_lines() {
        let toks = tokenize("v1 +\n  y2").unwrap();
        assert_eq!(toks[0].tok, Tok::Ident("v1".into()));
        assert_eq!(toks[1].pos, Pos { line: 1, col: 4 });
        assert_eq!(toks[2].pos, Pos { line: 2, col: 3 });
        assert_eq!(toks[3].tok, Tok::Eof);
    }

    #[test]
    fn unicode_operators() {
        let toks: Vec<Tok> = tokenize("u1 ⊗ x2 − 3").unwrap().into_iter().map(|t| t.tok).collect();
        assert_eq!(
            toks,
            vec![
                Tok::Ident("u1".into()),
                Tok::Star,
                Tok::Ident("x2".into()),
                Tok::Minus,
                Tok::Int("3".into()),
                Tok::Eof
            ]
        );
    }

    #[test]
    fn bad_character() {
        let err = tokenize("v1 & y1").unwrap_err();
        assert!(matches!(err, ParseError::UnexpectedChar { ch: '&', pos: Pos { line: 1, col: 4 } }));
    }
}
