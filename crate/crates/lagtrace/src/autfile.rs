//! Automorphism files.
//!
//! ```text
//! genus 2
//! a1 -> b2 a1 b1 a1^-1 b1^-1 a1 b1 a1 b1^-1 a1^-1 b2^-1
//! ...
//! b2 -> ...
//!
//! a1 -> ...        # the inverse, same layout
//! ```
//!
//! Generators without a line are fixed. `#` starts a comment.

use lagtrace_core::freegroup::{Ambient, FreeGroupMap, Generator, GroupWord, MappingClassRep};
use lagtrace_core::tensorlie::Alphabet;

use crate::error::{CliError, CliResult};

fn perr(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { line, column, message: message.into() }
}

struct Block {
    images: Vec<Option<GroupWord>>,
}

pub fn parse(text: &str) -> CliResult<MappingClassRep> {
    let mut genus = None;
    let mut blocks: Vec<Block> = Vec::new();
    let mut in_block = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            in_block = false;
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        let Some(g) = genus else {
            let mut parts = line.split_whitespace();
            if parts.next() != Some("genus") {
                return Err(perr(line_no, indent + 1, "expected `genus <g>` header"));
            }
            let value = parts.next().ok_or_else(|| perr(line_no, line.len() + 1, "missing genus"))?;
            let col = line.find(value).unwrap_or(0) + 1;
            let g: usize = value.parse().map_err(|_| perr(line_no, col, format!("bad genus `{value}`")))?;
            if !(2..=lagtrace_core::MAX_GENUS).contains(&g) {
                return Err(perr(line_no, col, format!("genus {g} outside 2..={}", lagtrace_core::MAX_GENUS)));
            }
            if let Some(extra) = parts.next() {
                let col = line.rfind(extra).unwrap_or(0) + 1;
                return Err(perr(line_no, col, format!("unexpected `{extra}`")));
            }
            genus = Some(g);
            continue;
        };
        if !in_block {
            if blocks.len() == 2 {
                return Err(perr(line_no, indent + 1, "more than two blocks of images"));
            }
            blocks.push(Block { images: vec![None; 2 * g] });
            in_block = true;
        }
        let arrow = line.find("->").ok_or_else(|| perr(line_no, indent + 1, "expected `<generator> -> <word>`"))?;
        let name = line[..arrow].trim();
        let pos = Alphabet::Surface(g)
            .parse_letter(name)
            .ok_or_else(|| perr(line_no, indent + 1, format!("unknown generator `{name}`")))?;
        let block = blocks.last_mut().expect("just pushed");
        if block.images[pos].is_some() {
            return Err(perr(line_no, indent + 1, format!("`{name}` given twice")));
        }
        let word = GroupWord::parse(&line[arrow + 2..], Ambient::Surface, g)
            .map_err(|e| CliError::at_line(line_no, arrow + 2, e))?;
        block.images[pos] = Some(word);
    }
    let g = genus.ok_or_else(|| perr(1, 1, "empty automorphism file"))?;
    if blocks.len() != 2 {
        return Err(perr(
            text.lines().count().max(1),
            1,
            "expected forward and inverse blocks separated by a blank line",
        ));
    }
    let to_map = |b: &Block| -> CliResult<FreeGroupMap> {
        let images = b
            .images
            .iter()
            .enumerate()
            .map(|(j, w)| match w {
                Some(w) => Ok(w.clone()),
                None => Ok(GroupWord::generator(Generator::from_position(Ambient::Surface, g, j), g)?),
            })
            .collect::<CliResult<Vec<_>>>()?;
        Ok(FreeGroupMap::new(Ambient::Surface, g, images)?)
    };
    Ok(MappingClassRep::new(to_map(&blocks[0])?, to_map(&blocks[1])?)?)
}

/// Writes every generator line of both maps; [`parse`] reads it back.
pub fn render(m: &MappingClassRep) -> String {
    let g = m.genus();
    let alphabet = Alphabet::Surface(g);
    let mut out = format!("genus {g}\n");
    for (k, map) in [m.forward(), m.inverse_map()].into_iter().enumerate() {
        if k == 1 {
            out.push('\n');
        }
        for (j, w) in map.images().iter().enumerate() {
            out.push_str(&format!("{} -> {}\n", alphabet.letter_name(j), w));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lagtrace_core::johnson::annulus_twist;

    #[test]
    fn round_trip() {
        let phi = annulus_twist(3).unwrap();
        assert_eq!(parse(&render(&phi)).unwrap(), phi);
    }

    #[test]
    fn fixed_generators_may_be_omitted() {
        let m = parse("genus 2\nb1 -> b1 a1\n\nb1 -> b1 a1^-1 # inverse\n").unwrap();
        assert!(m.extends_to_handlebody());
    }

    #[test]
    fn errors_carry_positions() {
        match parse("genus 2\na1 -> a1 c3\n\na1 -> a1\n") {
            Err(CliError::Parse { line: 2, column: 10, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse("genus 2\na1 a1\n") {
            Err(CliError::Parse { line: 2, column: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse("genus x\n") {
            Err(CliError::Parse { line: 1, column: 7, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse("genus 2\na1 -> a1 b1\n\na1 -> a1\n"),
            Err(CliError::Core(lagtrace_core::Error::NotAutomorphism(_)))
        ));
    }
}
