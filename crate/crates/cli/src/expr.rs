//! Statement expressions.
//!
//! ```text
//! expr    := meet ('|' meet)*
//! meet    := unary ('&' unary)*
//! unary   := '!' unary | primary
//! primary := '(' expr ')' | 'TOP' | 'BOTTOM' | atom-name
//! ```
//!
//! An atom name is any run of characters other than whitespace and
//! `| & ! ( )`. `TOP` and `BOTTOM` are reserved and always mean the truism and
//! the absurdity. Positions in errors are 1-based character columns.

use rootvec::{HypothesisSpace, Statement};

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Or,
    And,
    Not,
    Open,
    Close,
    Name(String),
}

fn is_operator(c: char) -> bool {
    matches!(c, '|' | '&' | '!' | '(' | ')')
}

fn tokenize(src: &str) -> Vec<(usize, Token)> {
    let chars: Vec<char> = src.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let token = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '|' => Token::Or,
            '&' => Token::And,
            '!' => Token::Not,
            '(' => Token::Open,
            ')' => Token::Close,
            _ => {
                let start = i;
                while i < chars.len() && !chars[i].is_whitespace() && !is_operator(chars[i]) {
                    i += 1;
                }
                tokens.push((column, Token::Name(chars[start..i].iter().collect())));
                continue;
            }
        };
        tokens.push((column, token));
        i += 1;
    }
    tokens
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    space: &'a HypothesisSpace,
}

impl Parser<'_> {
    fn error(&self, column: usize, message: impl Into<String>) -> CliError {
        CliError::Parse {
            expression: self.src.to_string(),
            column,
            message: message.into(),
        }
    }

    fn end_column(&self) -> usize {
        self.src.chars().count() + 1
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(c, _)| *c)
            .unwrap_or_else(|| self.end_column())
    }

    fn expr(&mut self) -> Result<Statement, CliError> {
        let mut lhs = self.meet()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            let rhs = self.meet()?;
            lhs = lhs.join(&rhs).expect("operands share a space");
        }
        Ok(lhs)
    }

    fn meet(&mut self) -> Result<Statement, CliError> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = lhs.meet(&rhs).expect("operands share a space");
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Statement, CliError> {
        if self.peek() == Some(&Token::Not) {
            self.pos += 1;
            return Ok(self.unary()?.complement());
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Statement, CliError> {
        let column = self.column();
        let Some((_, token)) = self.tokens.get(self.pos).cloned() else {
            return Err(self.error(column, "expected an atom, TOP, BOTTOM, '!' or '('"));
        };
        self.pos += 1;
        match token {
            Token::Open => {
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.error(self.column(), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Token::Name(name) if name == "TOP" => Ok(self.space.truism()),
            Token::Name(name) if name == "BOTTOM" => Ok(self.space.absurdity()),
            Token::Name(name) => self
                .space
                .atom(&name)
                .map_err(|_| self.error(column, format!("unknown atom {name:?}"))),
            other => Err(self.error(column, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn describe(token: &Token) -> &'static str {
    match token {
        Token::Or => "'|'",
        Token::And => "'&'",
        Token::Not => "'!'",
        Token::Open => "'('",
        Token::Close => "')'",
        Token::Name(_) => "name",
    }
}

/// Parses `src` into a statement over `space`.
pub fn parse_statement(src: &str, space: &HypothesisSpace) -> Result<Statement, CliError> {
    let mut parser = Parser {
        src,
        tokens: tokenize(src),
        pos: 0,
        space,
    };
    let statement = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        let (column, token) = &parser.tokens[parser.pos];
        return Err(parser.error(*column, format!("unexpected {}", describe(token))));
    }
    Ok(statement)
}
