//! Text format for rewrite systems: a variable block followed by a rule
//! block, `(VAR x y) (RULES f(x) -> x ...)`, with `;` line comments. The
//! printer emits the same dialect, and parsing its output reproduces the
//! system exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use matcert_core::{Rule, Term, Trs};

/// 1-based source location.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{position}: {message}")]
pub struct TrsParseError {
    pub position: Position,
    pub message: String,
}

fn err<T>(position: Position, message: impl Into<String>) -> Result<T, TrsParseError> {
    Err(TrsParseError { position, message: message.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    LParen,
    RParen,
    Comma,
    Arrow,
    Ident(String),
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
            TokenKind::Comma => "','".into(),
            TokenKind::Arrow => "'->'".into(),
            TokenKind::Ident(name) => format!("identifier '{name}'"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    position: Position,
}

fn lex(text: &str) -> Result<(Vec<Token>, Position), TrsParseError> {
    let mut tokens = Vec::new();
    let mut line = 1;
    let mut column = 1;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let position = Position { line, column };
        match ch {
            '\n' => {
                chars.next();
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                column += 1;
            }
            ';' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    column += 1;
                }
            }
            '(' => {
                chars.next();
                column += 1;
                tokens.push(Token { kind: TokenKind::LParen, position });
            }
            ')' => {
                chars.next();
                column += 1;
                tokens.push(Token { kind: TokenKind::RParen, position });
            }
            ',' => {
                chars.next();
                column += 1;
                tokens.push(Token { kind: TokenKind::Comma, position });
            }
            '-' => {
                chars.next();
                column += 1;
                if chars.peek() == Some(&'>') {
                    chars.next();
                    column += 1;
                    tokens.push(Token { kind: TokenKind::Arrow, position });
                } else {
                    return err(position, "expected '>' after '-'");
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                        column += 1;
                    } else {
                        break;
                    }
                }
                tokens.push(Token { kind: TokenKind::Ident(name), position });
            }
            other => return err(position, format!("unexpected character '{other}'")),
        }
    }
    Ok((tokens, Position { line, column }))
}

struct Parser {
    tokens: Vec<Token>,
    index: usize,
    eof: Position,
    variables: BTreeSet<String>,
    arities: BTreeMap<String, usize>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index)
    }

    fn position(&self) -> Position {
        self.peek().map_or(self.eof, |t| t.position)
    }

    fn advance(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.index).cloned();
        if token.is_some() {
            self.index += 1;
        }
        token
    }

    fn expect(&mut self, kind: TokenKind, wanted: &str) -> Result<(), TrsParseError> {
        match self.advance() {
            Some(token) if token.kind == kind => Ok(()),
            Some(token) => err(
                token.position,
                format!("expected {wanted}, found {}", token.kind.describe()),
            ),
            None => err(self.eof, format!("expected {wanted}, found end of input")),
        }
    }

    fn expect_keyword(&mut self, word: &str) -> Result<(), TrsParseError> {
        match self.advance() {
            Some(Token { kind: TokenKind::Ident(name), .. }) if name == word => Ok(()),
            Some(token) => err(
                token.position,
                format!("expected '{word}', found {}", token.kind.describe()),
            ),
            None => err(self.eof, format!("expected '{word}', found end of input")),
        }
    }

    fn expect_ident(&mut self) -> Result<(String, Position), TrsParseError> {
        match self.advance() {
            Some(Token { kind: TokenKind::Ident(name), position }) => Ok((name, position)),
            Some(token) => err(
                token.position,
                format!("expected an identifier, found {}", token.kind.describe()),
            ),
            None => err(self.eof, "expected an identifier, found end of input"),
        }
    }

    /// Records one use of a function symbol, rejecting arity drift with the
    /// position of the later, conflicting use.
    fn note_arity(
        &mut self,
        name: &str,
        arity: usize,
        position: Position,
    ) -> Result<(), TrsParseError> {
        match self.arities.get(name) {
            None => {
                self.arities.insert(name.to_string(), arity);
                Ok(())
            }
            Some(&known) if known == arity => Ok(()),
            Some(&known) => err(
                position,
                format!("symbol '{name}' used with {arity} argument(s) after earlier use with {known}"),
            ),
        }
    }

    fn parse_term(&mut self) -> Result<Term, TrsParseError> {
        let (name, position) = self.expect_ident()?;
        if matches!(self.peek(), Some(Token { kind: TokenKind::LParen, .. })) {
            self.advance();
            if self.variables.contains(&name) {
                return err(position, format!("variable '{name}' cannot take arguments"));
            }
            let mut args = Vec::new();
            if matches!(self.peek(), Some(Token { kind: TokenKind::RParen, .. })) {
                self.advance();
            } else {
                loop {
                    args.push(self.parse_term()?);
                    match self.advance() {
                        Some(Token { kind: TokenKind::Comma, .. }) => {}
                        Some(Token { kind: TokenKind::RParen, .. }) => break,
                        Some(token) => {
                            return err(
                                token.position,
                                format!(
                                    "expected ',' or ')' in an argument list, found {}",
                                    token.kind.describe()
                                ),
                            )
                        }
                        None => {
                            return err(self.eof, "unclosed argument list at end of input")
                        }
                    }
                }
            }
            self.note_arity(&name, args.len(), position)?;
            Ok(Term::app(name, args))
        } else if self.variables.contains(&name) {
            Ok(Term::var(name))
        } else {
            self.note_arity(&name, 0, position)?;
            Ok(Term::constant(name))
        }
    }
}

/// Parses the `(VAR ...) (RULES ...)` dialect into a rewrite system.
pub fn parse_trs(text: &str) -> Result<Trs, TrsParseError> {
    let (tokens, eof) = lex(text)?;
    let mut parser = Parser {
        tokens,
        index: 0,
        eof,
        variables: BTreeSet::new(),
        arities: BTreeMap::new(),
    };

    parser.expect(TokenKind::LParen, "'(' opening the VAR block")?;
    parser.expect_keyword("VAR")?;
    while let Some(Token { kind: TokenKind::Ident(_), .. }) = parser.peek() {
        let (name, _) = parser.expect_ident()?;
        parser.variables.insert(name);
    }
    parser.expect(TokenKind::RParen, "')' closing the VAR block")?;

    parser.expect(TokenKind::LParen, "'(' opening the RULES block")?;
    parser.expect_keyword("RULES")?;
    let mut rules = Vec::new();
    while !matches!(parser.peek(), Some(Token { kind: TokenKind::RParen, .. }) | None) {
        let rule_position = parser.position();
        let lhs = parser.parse_term()?;
        parser.expect(TokenKind::Arrow, "'->' between the sides of a rule")?;
        let rhs = parser.parse_term()?;
        let rule = Rule::new(lhs, rhs)
            .map_err(|e| TrsParseError { position: rule_position, message: e.to_string() })?;
        rules.push(rule);
    }
    parser.expect(TokenKind::RParen, "')' closing the RULES block")?;
    if let Some(token) = parser.peek() {
        return err(
            token.position,
            format!("unexpected {} after the RULES block", token.kind.describe()),
        );
    }

    Trs::new(rules)
        .map_err(|e| TrsParseError { position: Position { line: 1, column: 1 }, message: e.to_string() })
}

/// Prints a system in the same dialect `parse_trs` reads.
pub fn print_trs(trs: &Trs) -> String {
    let mut variables: BTreeSet<&str> = BTreeSet::new();
    for rule in trs.rules() {
        variables.extend(rule.lhs().variables());
    }
    let mut out = String::from("(VAR");
    for name in &variables {
        out.push(' ');
        out.push_str(name);
    }
    out.push_str(")\n(RULES\n");
    for rule in trs.rules() {
        out.push_str("  ");
        out.push_str(&rule.to_string());
        out.push('\n');
    }
    out.push_str(")\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_one_rule_system() {
        let trs = parse_trs("(VAR x) (RULES f(x) -> x)").unwrap();
        assert_eq!(trs.rules().len(), 1);
        assert_eq!(trs.rules()[0].lhs(), &Term::app("f", vec![Term::var("x")]));
        assert_eq!(trs.rules()[0].rhs(), &Term::var("x"));
    }

    #[test]
    fn infers_the_signature_across_rules() {
        let trs = parse_trs("(VAR x) (RULES f(x) -> g(x, x))").unwrap();
        assert_eq!(trs.signature().get("f"), Some(&1));
        assert_eq!(trs.signature().get("g"), Some(&2));
    }

    #[test]
    fn rejects_a_variable_left_hand_side() {
        let e = parse_trs("(VAR x) (RULES x -> f(x))").unwrap_err();
        assert!(e.message.contains("variable"), "{e}");
        assert_eq!(e.position, Position { line: 1, column: 16 });
    }

    #[test]
    fn rejects_arity_drift_at_the_second_use() {
        let e = parse_trs("(VAR x y) (RULES f(x) -> x f(x, y) -> x)").unwrap_err();
        assert!(e.message.contains("argument"), "{e}");
        assert_eq!(e.position.line, 1);
        assert_eq!(e.position.column, 28);
    }

    #[test]
    fn rejects_an_unbound_right_variable() {
        let e = parse_trs("(VAR x y) (RULES f(x) -> y)").unwrap_err();
        assert!(e.message.contains('y'), "{e}");
    }

    #[test]
    fn positions_follow_lines_and_comments() {
        let text = "; a comment\n(VAR x)\n(RULES\n  f(x) -> x\n  @)\n";
        let e = parse_trs(text).unwrap_err();
        assert_eq!(e.position, Position { line: 5, column: 3 });
    }

    #[test]
    fn empty_rule_block_parses() {
        let trs = parse_trs("(VAR x) (RULES)").unwrap();
        assert!(trs.rules().is_empty());
    }

    #[test]
    fn constants_parse_bare_and_with_parens() {
        let trs = parse_trs("(VAR) (RULES a -> b())").unwrap();
        assert_eq!(trs.rules()[0].lhs(), &Term::constant("a"));
        assert_eq!(trs.rules()[0].rhs(), &Term::constant("b"));
    }

    #[test]
    fn print_then_parse_is_identity() {
        for text in [
            "(VAR x) (RULES f(x) -> x)",
            "(VAR x) (RULES a(b(x)) -> b(a(x)))",
            "(VAR x y) (RULES g(x, y) -> f(x) f(x) -> x)",
            "(VAR) (RULES a -> b)",
            "(VAR) (RULES)",
        ] {
            let trs = parse_trs(text).unwrap();
            assert_eq!(parse_trs(&print_trs(&trs)).unwrap(), trs, "round-trip of {text}");
        }
    }
}
