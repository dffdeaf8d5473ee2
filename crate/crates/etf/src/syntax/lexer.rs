//! Tokenizer for the term/formula grammar. Whitespace is insignificant.

use super::SyntaxError;

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    LParen,
    RParen,
    Comma,
    Dot,
    Colon,
    Equal,
    Tilde,
    Amp,
    Pipe,
    Arrow,
    DArrow,
    Zero,
    SuccSym,
    All,
    Ex,
    ExBang,
    Hole,
    Ident(String),
    SortName(String),
    Eof,
}

#[derive(Debug, Clone)]
pub struct Token {
    pub tok: Tok,
    pub pos: usize,
}

pub fn describe(tok: &Tok) -> String {
    match tok {
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Dot => "`.`".into(),
        Tok::Colon => "`:`".into(),
        Tok::Equal => "`=`".into(),
        Tok::Tilde => "`~`".into(),
        Tok::Amp => "`&`".into(),
        Tok::Pipe => "`|`".into(),
        Tok::Arrow => "`->`".into(),
        Tok::DArrow => "`<->`".into(),
        Tok::Zero => "`0`".into(),
        Tok::SuccSym => "`S`".into(),
        Tok::All => "`all`".into(),
        Tok::Ex => "`ex`".into(),
        Tok::ExBang => "`ex!`".into(),
        Tok::Hole => "`_`".into(),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::SortName(s) => format!("sort `{s}`"),
        Tok::Eof => "end of input".into(),
    }
}

pub fn tokenize(input: &str) -> Result<Vec<Token>, SyntaxError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                out.push(Token { tok: Tok::LParen, pos: i });
                i += 1;
            }
            ')' => {
                out.push(Token { tok: Tok::RParen, pos: i });
                i += 1;
            }
            ',' => {
                out.push(Token { tok: Tok::Comma, pos: i });
                i += 1;
            }
            '.' => {
                out.push(Token { tok: Tok::Dot, pos: i });
                i += 1;
            }
            ':' => {
                out.push(Token { tok: Tok::Colon, pos: i });
                i += 1;
            }
            '=' => {
                out.push(Token { tok: Tok::Equal, pos: i });
                i += 1;
            }
            '~' => {
                out.push(Token { tok: Tok::Tilde, pos: i });
                i += 1;
            }
            '&' => {
                out.push(Token { tok: Tok::Amp, pos: i });
                i += 1;
            }
            '|' => {
                out.push(Token { tok: Tok::Pipe, pos: i });
                i += 1;
            }
            '_' => {
                out.push(Token { tok: Tok::Hole, pos: i });
                i += 1;
            }
            '0' => {
                out.push(Token { tok: Tok::Zero, pos: i });
                i += 1;
            }
            '-' => {
                if i + 1 < bytes.len() && bytes[i + 1] as char == '>' {
                    out.push(Token { tok: Tok::Arrow, pos: i });
                    i += 2;
                } else {
                    return Err(SyntaxError::Syntax {
                        pos: i,
                        expected: "`->`".into(),
                        found: "`-`".into(),
                    });
                }
            }
            '<' => {
                if i + 2 < bytes.len() && &input[i..i + 3] == "<->" {
                    out.push(Token { tok: Tok::DArrow, pos: i });
                    i += 3;
                } else {
                    return Err(SyntaxError::Syntax {
                        pos: i,
                        expected: "`<->`".into(),
                        found: "`<`".into(),
                    });
                }
            }
            'S' => {
                out.push(Token { tok: Tok::SuccSym, pos: i });
                i += 1;
            }
            'N' | 'F' => {
                // Sort names: N, F1, F2, F3.
                let start = i;
                i += 1;
                if c == 'F' {
                    if i < bytes.len() && matches!(bytes[i] as char, '1' | '2' | '3') {
                        i += 1;
                    } else {
                        return Err(SyntaxError::Syntax {
                            pos: start,
                            expected: "sort `F1`, `F2`, or `F3`".into(),
                            found: "`F`".into(),
                        });
                    }
                }
                out.push(Token { tok: Tok::SortName(input[start..i].to_string()), pos: start });
            }
            'a'..='z' => {
                let start = i;
                while i < bytes.len()
                    && matches!(bytes[i] as char, 'a'..='z' | 'A'..='Z' | '0'..='9' | '_')
                {
                    i += 1;
                }
                let word = &input[start..i];
                let tok = match word {
                    "all" => Tok::All,
                    "ex" => {
                        if i < bytes.len() && bytes[i] as char == '!' {
                            i += 1;
                            Tok::ExBang
                        } else {
                            Tok::Ex
                        }
                    }
                    _ => Tok::Ident(word.to_string()),
                };
                out.push(Token { tok, pos: start });
            }
            other => {
                return Err(SyntaxError::Syntax {
                    pos: i,
                    expected: "a token".into(),
                    found: format!("`{other}`"),
                });
            }
        }
    }
    out.push(Token { tok: Tok::Eof, pos: input.len() });
    Ok(out)
}
