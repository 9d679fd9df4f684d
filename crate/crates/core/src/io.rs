//! Text formats for spaces, nets, filters and sequence literals.
//!
//! ```text
//! space 2          net directed 2      net sequence omega      filter 2
//! -                11                  prefix: 0               1
//! 0                01                  cycle: 1                0,1
//! 0,1              values: 1,0
//! ```
//!
//! Blank lines and anything after `#` are ignored. Point sets are
//! comma-separated indices, or `-` for the empty set.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::filters::Filter;
use crate::finite_top::{FiniteSpace, PointSet};
use crate::nets::{DirectedSet, Net, Relation};
use crate::sequences::EpSequence;

/// Non-empty lines with comments stripped, paired with 1-based numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn header<'a>(
    it: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
) -> Result<(usize, Vec<&'a str>)> {
    let (line, text) = it
        .next()
        .ok_or_else(|| Error::parse(1, format!("expected `{keyword} …` header")))?;
    let words: Vec<&str> = text.split_whitespace().collect();
    if words.first() != Some(&keyword) {
        return Err(Error::parse(line, format!("expected `{keyword} …` header")));
    }
    Ok((line, words[1..].to_vec()))
}

fn parse_usize(s: &str, line: usize) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::parse(line, format!("`{s}` is not a natural number")))
}

/// `-` or comma-separated indices below `n`.
pub fn parse_point_set(s: &str, n: usize) -> Result<PointSet> {
    parse_point_set_at(s, n, 1)
}

fn parse_point_set_at(s: &str, n: usize, line: usize) -> Result<PointSet> {
    let s = s.trim();
    if s == "-" {
        return Ok(PointSet::empty(n));
    }
    let points = s
        .split(',')
        .map(|p| parse_usize(p, line))
        .collect::<Result<Vec<_>>>()?;
    PointSet::from_points(n, points).map_err(|e| Error::parse(line, e.to_string()))
}

fn parse_points(s: &str, line: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(vec![]);
    }
    s.split(',').map(|p| parse_usize(p, line)).collect()
}

fn parse_size(words: &[&str], line: usize) -> Result<usize> {
    match words {
        [n] => parse_usize(n, line),
        _ => Err(Error::parse(line, "expected a single carrier size")),
    }
}

pub fn parse_space(text: &str) -> Result<FiniteSpace> {
    let mut it = lines(text);
    let (line, words) = header(&mut it, "space")?;
    let n = parse_size(&words, line)?;
    let mut opens = Vec::new();
    for (line, l) in it {
        opens.push(parse_point_set_at(l, n, line)?);
    }
    FiniteSpace::new(n, opens).map_err(|e| Error::parse(line, e.to_string()))
}

pub fn format_space(space: &FiniteSpace) -> String {
    let mut out = format!("space {}\n", space.carrier_size());
    for u in space.opens() {
        out.push_str(&u.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_filter(text: &str) -> Result<Filter> {
    let mut it = lines(text);
    let (line, words) = header(&mut it, "filter")?;
    let n = parse_size(&words, line)?;
    let mut sets = Vec::new();
    for (line, l) in it {
        sets.push(parse_point_set_at(l, n, line)?);
    }
    Filter::new(n, sets).map_err(|e| Error::parse(line, e.to_string()))
}

pub fn format_filter(f: &Filter) -> String {
    let mut out = format!("filter {}\n", f.carrier_size());
    for a in f.sets() {
        out.push_str(&a.to_string());
        out.push('\n');
    }
    out
}

fn keyed<'a>(
    it: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
    last: usize,
) -> Result<(usize, &'a str)> {
    let (line, l) = it
        .next()
        .ok_or_else(|| Error::parse(last + 1, format!("expected `{key}:`")))?;
    let rest = l
        .strip_prefix(key)
        .and_then(|r| r.trim_start().strip_prefix(':'))
        .ok_or_else(|| Error::parse(line, format!("expected `{key}:`")))?;
    Ok((line, rest))
}

/// `net directed <k>` followed by `k` relation rows and a `values:` line,
/// or `net sequence omega` followed by `prefix:` and `cycle:` lines.
pub fn parse_net(text: &str) -> Result<Net> {
    let mut it = lines(text);
    let (line, words) = header(&mut it, "net")?;
    match words.as_slice() {
        ["directed" | "finite", k] => {
            let k = parse_usize(k, line)?;
            let mut rows = Vec::with_capacity(k);
            let mut last = line;
            for _ in 0..k {
                let (l, row) = it
                    .next()
                    .ok_or_else(|| Error::parse(last + 1, "missing relation row"))?;
                let bits: Vec<bool> = row
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Error::parse(l, format!("`{c}` is not 0 or 1"))),
                    })
                    .collect::<Result<_>>()?;
                rows.push(bits);
                last = l;
            }
            let rel = Relation::new(rows).map_err(|e| Error::parse(line, e.to_string()))?;
            let index = DirectedSet::new(rel).map_err(|e| Error::parse(line, e.to_string()))?;
            let (vl, values) = keyed(&mut it, "values", last)?;
            let values = parse_points(values, vl)?;
            expect_end(&mut it)?;
            Net::finite(index, values).map_err(|e| Error::parse(vl, e.to_string()))
        }
        ["sequence" | "omega"] | ["sequence" | "omega", "omega" | "ω"] => {
            let (pl, prefix) = keyed(&mut it, "prefix", line)?;
            let prefix = parse_points(prefix, pl)?;
            let (cl, cycle) = keyed(&mut it, "cycle", pl)?;
            let cycle = parse_points(cycle, cl)?;
            expect_end(&mut it)?;
            Ok(Net::Sequence(
                EpSequence::new(prefix, cycle).map_err(|e| Error::parse(cl, e.to_string()))?,
            ))
        }
        _ => Err(Error::parse(
            line,
            "expected `net directed <k>` or `net sequence omega`",
        )),
    }
}

fn expect_end<'a>(it: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<()> {
    match it.next() {
        Some((line, l)) => Err(Error::parse(line, format!("unexpected `{l}`"))),
        None => Ok(()),
    }
}

pub fn format_net(net: &Net) -> String {
    let join = |v: &[usize]| {
        if v.is_empty() {
            "-".to_string()
        } else {
            v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        }
    };
    match net {
        Net::Finite { index, values } => {
            let mut out = format!("net directed {}\n", index.size());
            for row in index.relation().rows() {
                out.extend(row.iter().map(|&b| if b { '1' } else { '0' }));
                out.push('\n');
            }
            out.push_str(&format!("values: {}\n", join(values)));
            out
        }
        Net::Sequence(s) => format!(
            "net sequence omega\nprefix: {}\ncycle: {}\n",
            join(s.prefix()),
            join(s.cycle())
        ),
    }
}

/// `[p0,p1,…|c0,c1,…]` with each entry parsed by `T::from_str`.
pub fn parse_sequence<T>(s: &str) -> Result<EpSequence<T>>
where
    T: FromStr + Clone,
    T::Err: std::fmt::Display,
{
    let bad = |m: String| Error::parse(1, m);
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| bad(format!("`{s}` is not of the form [prefix|cycle]")))?;
    let (prefix, cycle) = inner
        .split_once('|')
        .ok_or_else(|| bad(format!("`{s}` has no `|`")))?;
    let items = |part: &str| -> Result<Vec<T>> {
        let part = part.trim();
        if part.is_empty() {
            return Ok(vec![]);
        }
        part.split(',')
            .map(|x| {
                x.trim()
                    .parse::<T>()
                    .map_err(|e| bad(format!("`{x}`: {e}")))
            })
            .collect()
    };
    EpSequence::new(items(prefix)?, items(cycle)?).map_err(|e| bad(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::CnfOrdinal;

    #[test]
    fn space_round_trip() {
        let s = FiniteSpace::sierpinski();
        let text = format_space(&s);
        assert_eq!(text, "space 2\n-\n0\n0,1\n");
        assert_eq!(parse_space(&text).unwrap(), s);
        let commented = "# Sierpiński\nspace 2\n\n-   # empty\n0\n0,1\n";
        assert_eq!(parse_space(commented).unwrap(), s);
    }

    #[test]
    fn space_errors() {
        assert!(matches!(
            parse_space("spaces 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_space("space 2\n-\n0,2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_space("space 2\n-\n1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(parse_space("").is_err());
    }

    #[test]
    fn nets() {
        let text = "net directed 2\n11\n01\nvalues: 1,0\n";
        let net = parse_net(text).unwrap();
        assert_eq!(format_net(&net), text);
        let seq = "net sequence omega\nprefix: -\ncycle: 0,1\n";
        let net = parse_net(seq).unwrap();
        assert_eq!(
            net,
            Net::Sequence(EpSequence::new(vec![], vec![0, 1]).unwrap())
        );
        assert_eq!(format_net(&net), seq);
        assert!(parse_net("net directed 2\n10\n01\nvalues: 0,1\n").is_err());
        assert!(parse_net("net sequence omega\nprefix: 0\ncycle:\n").is_err());
        assert!(parse_net("net directed 1\n1\nvalues: 0\nextra\n").is_err());
    }

    #[test]
    fn filters() {
        let f = parse_filter("filter 2\n1\n0,1\n").unwrap();
        assert_eq!(parse_filter(&format_filter(&f)).unwrap(), f);
        assert!(parse_filter("filter 2\n1\n").is_err());
    }

    #[test]
    fn sequence_literals() {
        let s: EpSequence = parse_sequence("[0,1|2]").unwrap();
        assert_eq!(s.to_string(), "[0,1|2]");
        let s: EpSequence = parse_sequence("[|0, 1]").unwrap();
        assert_eq!(s.prefix().len(), 0);
        let o: EpSequence<CnfOrdinal> = parse_sequence("[w,3|1,w^2*2]").unwrap();
        assert_eq!(o.to_string(), "[ω,3|1,ω^2·2]");
        assert!(parse_sequence::<usize>("[1|]").is_err());
        assert!(parse_sequence::<usize>("1|2").is_err());
    }
}
