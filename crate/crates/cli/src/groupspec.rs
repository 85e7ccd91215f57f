//! The group spec text format: one group per block. Line 1 is `degree n`;
//! each following line is one generator in cycle notation, e.g.
//! `(1 2)(3 4)`; a blank line terminates the block. The identity generator
//! is written `()`.

use compositum_core::{Caps, PermGroup, Permutation};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn to_group(&self, caps: &Caps) -> Result<PermGroup, CliError> {
        Ok(PermGroup::generate(
            self.degree,
            self.generators.clone(),
            caps,
        )?)
    }
}

/// Parses the cycles of one generator line. `()` yields no cycles.
fn parse_cycles(line: &str) -> Result<Vec<Vec<usize>>, CliError> {
    let mut cycles = Vec::new();
    let mut chars = line.chars().peekable();
    loop {
        while chars.peek().map_or(false, |c| c.is_whitespace()) {
            chars.next();
        }
        match chars.next() {
            None => break,
            Some('(') => {}
            Some(c) => {
                return Err(CliError::parse(format!(
                    "expected '(' in cycle notation, found '{c}' in line '{line}'"
                )))
            }
        }
        let mut cycle = Vec::new();
        let mut number = String::new();
        loop {
            match chars.next() {
                Some(d) if d.is_ascii_digit() => number.push(d),
                Some(c) if c.is_whitespace() || c == ',' => {
                    if !number.is_empty() {
                        cycle.push(parse_point(&number, line)?);
                        number.clear();
                    }
                }
                Some(')') => {
                    if !number.is_empty() {
                        cycle.push(parse_point(&number, line)?);
                    }
                    break;
                }
                Some(c) => {
                    return Err(CliError::parse(format!(
                        "unexpected character '{c}' inside a cycle in line '{line}'"
                    )))
                }
                None => {
                    return Err(CliError::parse(format!("unterminated cycle in line '{line}'")))
                }
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Ok(cycles)
}

fn parse_point(text: &str, line: &str) -> Result<usize, CliError> {
    text.parse::<usize>()
        .map_err(|_| CliError::parse(format!("invalid point '{text}' in line '{line}'")))
}

/// Parses every block in the input text.
pub fn parse_group_blocks(text: &str) -> Result<Vec<GroupSpec>, CliError> {
    let mut blocks = Vec::new();
    let mut lines = text.lines().peekable();
    while lines.peek().is_some() {
        // Skip blank separators.
        while lines.peek().map_or(false, |l| l.trim().is_empty()) {
            lines.next();
        }
        let header = match lines.next() {
            None => break,
            Some(h) => h.trim(),
        };
        let degree: usize = match header.strip_prefix("degree") {
            Some(rest) => rest
                .trim()
                .parse()
                .map_err(|_| CliError::parse(format!("invalid degree line '{header}'")))?,
            None => {
                return Err(CliError::parse(format!(
                    "expected 'degree n' header, found '{header}'"
                )))
            }
        };
        let mut generators = Vec::new();
        for line in lines.by_ref() {
            let line = line.trim();
            if line.is_empty() {
                break;
            }
            let cycles = parse_cycles(line)?;
            generators.push(Permutation::from_cycles(degree, &cycles)?);
        }
        blocks.push(GroupSpec { degree, generators });
    }
    Ok(blocks)
}

/// Parses a file expected to hold exactly one group block.
pub fn parse_single_group(text: &str, what: &str) -> Result<GroupSpec, CliError> {
    let blocks = parse_group_blocks(text)?;
    match blocks.len() {
        1 => Ok(blocks.into_iter().next().expect("length checked")),
        n => Err(CliError::parse(format!(
            "{what}: expected exactly one group block, found {n}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_block() {
        let spec = parse_single_group("degree 3\n(1 2)\n(1 2 3)\n", "test").unwrap();
        assert_eq!(spec.degree, 3);
        assert_eq!(spec.generators.len(), 2);
        let group = spec.to_group(&Caps::default()).unwrap();
        assert_eq!(group.order(), 6);
    }

    #[test]
    fn identity_line() {
        let spec = parse_single_group("degree 2\n()\n", "test").unwrap();
        assert!(spec.generators[0].is_identity());
        assert_eq!(spec.to_group(&Caps::default()).unwrap().order(), 1);
    }

    #[test]
    fn multiple_blocks() {
        let text = "degree 3\n(1 2)\n\ndegree 2\n(1 2)\n";
        let blocks = parse_group_blocks(text).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].degree, 3);
        assert_eq!(blocks[1].degree, 2);
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_group_blocks("degree x\n").is_err());
        assert!(parse_group_blocks("order 3\n(1 2)\n").is_err());
        assert!(parse_group_blocks("degree 3\n(1 2\n").is_err());
        assert!(parse_group_blocks("degree 3\n(1 b)\n").is_err());
        // Point outside the domain.
        assert!(parse_group_blocks("degree 3\n(1 4)\n").is_err());
        let err = parse_group_blocks("degree 3\n1 2)\n").unwrap_err();
        assert_eq!(err.code, crate::EXIT_PARSE);
    }

    #[test]
    fn disjoint_and_composed_cycles() {
        let spec = parse_single_group("degree 4\n(1 2)(3 4)\n", "test").unwrap();
        assert_eq!(format!("{}", spec.generators[0]), "(1 2)(3 4)");
        // Non-disjoint cycles compose right to left.
        let spec2 = parse_single_group("degree 3\n(2 3)(1 2)\n", "test").unwrap();
        assert_eq!(format!("{}", spec2.generators[0]), "(1 3 2)");
    }
}
