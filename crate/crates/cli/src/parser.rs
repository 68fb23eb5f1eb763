use std::fmt;

use pest::iterators::{Pair, Pairs};
use pest::pratt_parser::{Assoc, Op, PrattParser};
use pest::Parser;
use pest_derive::Parser;

use crate::ast::*;

#[derive(Parser)]
#[grammar = "script.pest"]
struct ScriptParser;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: Vec<String>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn describe(rule: &Rule) -> String {
    match rule {
        Rule::semicolon => "';'".into(),
        Rule::comma => "','".into(),
        Rule::equals => "'='".into(),
        Rule::lparen => "'('".into(),
        Rule::rparen => "')'".into(),
        Rule::lbracket => "'['".into(),
        Rule::rbracket => "']'".into(),
        Rule::dots => "'..'".into(),
        Rule::ident => "identifier".into(),
        Rule::int => "integer".into(),
        Rule::expr | Rule::neg | Rule::paren => "expression".into(),
        Rule::add | Rule::sub | Rule::mul | Rule::pow => "operator".into(),
        Rule::EOI => "end of input".into(),
        Rule::query_kind => "query kind".into(),
        Rule::config_key => "'cap' or 'seed'".into(),
        Rule::field => "field".into(),
        Rule::pairs => "'all' or integer".into(),
        Rule::ring_def | Rule::ideal_def | Rule::rab_def | Rule::roots_cmd | Rule::query | Rule::check | Rule::search | Rule::set_cmd => {
            "statement".into()
        }
        other => format!("{other:?}"),
    }
}

fn convert(err: pest::error::Error<Rule>) -> ParseError {
    let (line, col) = match err.line_col {
        pest::error::LineColLocation::Pos(p) => p,
        pest::error::LineColLocation::Span(p, _) => p,
    };
    let mut expected: Vec<String> = match &err.variant {
        pest::error::ErrorVariant::ParsingError { positives, .. } => positives.iter().map(describe).collect(),
        pest::error::ErrorVariant::CustomError { message } => vec![message.clone()],
    };
    expected.sort();
    expected.dedup();
    let message = if expected.is_empty() { "unexpected input".into() } else { format!("expected {}", expected.join(" or ")) };
    ParseError { line, col, expected, message }
}

fn custom(pair: &Pair<Rule>, message: String) -> ParseError {
    let (line, col) = pair.line_col();
    ParseError { line, col, expected: vec![], message }
}

/// Parses a whole script into commands.
pub fn parse_script(text: &str) -> Result<Vec<Command>, ParseError> {
    let mut pairs = ScriptParser::parse(Rule::script, text).map_err(convert)?;
    let script = pairs.next().unwrap();
    script.into_inner().filter(|p| !matches!(p.as_rule(), Rule::semicolon | Rule::EOI)).map(command).collect()
}

/// Meaningful children: punctuation and keyword-free tokens dropped.
fn inner(pair: Pair<Rule>) -> Vec<Pair<Rule>> {
    pair.into_inner()
        .filter(|p| {
            !matches!(
                p.as_rule(),
                Rule::comma | Rule::equals | Rule::lparen | Rule::rparen | Rule::lbracket | Rule::rbracket | Rule::dots
            )
        })
        .collect()
}

fn number<T: std::str::FromStr>(pair: &Pair<Rule>) -> Result<T, ParseError> {
    pair.as_str().parse().map_err(|_| custom(pair, format!("integer {} out of range", pair.as_str())))
}

fn idents(pair: Pair<Rule>) -> Vec<String> {
    inner(pair).into_iter().map(|p| p.as_str().to_string()).collect()
}

fn exprs(pair: Pair<Rule>) -> Result<Vec<Expr>, ParseError> {
    inner(pair).into_iter().map(expr).collect()
}

fn command(pair: Pair<Rule>) -> Result<Command, ParseError> {
    let rule = pair.as_rule();
    let at = pair.clone();
    let mut it = inner(pair).into_iter();
    let mut next = || it.next().expect("grammar guarantees the child");
    Ok(match rule {
        Rule::ring_def => {
            let name = next().as_str().to_string();
            let spec = next();
            let spec = match spec.as_rule() {
                Rule::zmod_spec => RingSpec::ZMod(number(&inner(spec)[0])?),
                _ => {
                    let mut parts = inner(spec).into_iter();
                    let field = parts.next().unwrap().into_inner().next().unwrap();
                    let field = match field.as_rule() {
                        Rule::gf => FieldSpec::Prime(number(&inner(field)[0])?),
                        _ => FieldSpec::Rationals,
                    };
                    let vars = idents(parts.next().unwrap());
                    let relations = exprs(parts.next().unwrap())?;
                    let (mut order, mut assume) = (None, Vec::new());
                    for opt in parts {
                        match opt.as_rule() {
                            Rule::order_opt => {
                                order = Some(if inner(opt)[0].as_str() == "lex" { OrderSpec::Lex } else { OrderSpec::DegRevLex })
                            }
                            _ => {
                                assume = inner(opt)
                                    .iter()
                                    .map(|f| if f.as_str() == "reduced" { Flag::Reduced } else { Flag::Domain })
                                    .collect()
                            }
                        }
                    }
                    RingSpec::Quotient { field, vars, relations, order, assume }
                }
            };
            Command::DefineRing { name, spec }
        }
        Rule::ideal_def => {
            let name = next().as_str().to_string();
            let ring = next().as_str().to_string();
            Command::DefineIdeal { name, ring, gens: exprs(next())? }
        }
        Rule::rab_def => {
            let name = next().as_str().to_string();
            let ring = next().as_str().to_string();
            let ideal = next().as_str().to_string();
            let a = expr(next())?;
            let b = expr(next())?;
            Command::DefineRab { name, ring, ideal, a, b }
        }
        Rule::roots_cmd => {
            let target = next().as_str().to_string();
            let alpha = expr(next())?;
            Command::AttachRoots { target, alpha, beta: expr(next())? }
        }
        Rule::query => {
            let kind = QueryKind::from_keyword(next().as_str()).unwrap();
            let target = next().as_str().to_string();
            let (mut prime, mut roots) = (None, None);
            for part in it {
                match part.as_rule() {
                    Rule::over => prime = Some(exprs(inner(part).remove(0))?),
                    _ => {
                        let mut es = inner(part).into_iter().map(expr).collect::<Result<Vec<_>, _>>()?.into_iter();
                        let (alpha, beta) = (es.next().unwrap(), es.next().unwrap());
                        roots = Some(RootArgs { alpha, beta, gamma: es.next() });
                    }
                }
            }
            Command::Query { kind, target, prime, roots }
        }
        Rule::check => Command::OracleCheck { target: next().as_str().to_string() },
        Rule::search => {
            let n_min = number(&next())?;
            let n_max = number(&next())?;
            let pairs = match it.next() {
                Some(p) if p.as_str() != "all" => PairSpec::Sample(number(&p)?),
                _ => PairSpec::All,
            };
            if n_min > n_max {
                return Err(custom(&at, format!("empty range {n_min}..{n_max}")));
            }
            Command::Search { n_min, n_max, pairs }
        }
        Rule::set_cmd => {
            let key = if next().as_str() == "cap" { ConfigKey::Cap } else { ConfigKey::Seed };
            Command::SetConfig { key, value: number(&next())? }
        }
        other => unreachable!("{other:?}"),
    })
}

fn pratt() -> PrattParser<Rule> {
    PrattParser::new()
        .op(Op::infix(Rule::add, Assoc::Left) | Op::infix(Rule::sub, Assoc::Left))
        .op(Op::infix(Rule::mul, Assoc::Left))
        .op(Op::prefix(Rule::neg))
        .op(Op::postfix(Rule::pow))
}

fn expr(pair: Pair<Rule>) -> Result<Expr, ParseError> {
    climb(pair.into_inner())
}

fn climb(pairs: Pairs<Rule>) -> Result<Expr, ParseError> {
    pratt()
        .map_primary(|p| match p.as_rule() {
            Rule::int => Ok(Expr::Int(number(&p)?)),
            Rule::ident => Ok(Expr::Var(p.as_str().to_string())),
            Rule::paren => expr(inner(p).remove(0)),
            other => unreachable!("{other:?}"),
        })
        .map_prefix(|_, x| Ok(Expr::Neg(Box::new(x?))))
        .map_postfix(|x, op| Ok(Expr::Pow(Box::new(x?), number(&op.into_inner().next().unwrap())?)))
        .map_infix(|l, op, r| {
            let (l, r) = (Box::new(l?), Box::new(r?));
            Ok(match op.as_rule() {
                Rule::add => Expr::Add(l, r),
                Rule::sub => Expr::Sub(l, r),
                _ => Expr::Mul(l, r),
            })
        })
        .parse(pairs)
}
