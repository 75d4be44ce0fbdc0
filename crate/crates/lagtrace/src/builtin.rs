//! Named fixtures for `--builtin`.

use lagtrace_core::freegroup::MappingClassRep;
use lagtrace_core::johnson::{
    annulus_twist, handle_slide, handle_swap, longitude_twist, meridian_twist, non_handlebody_example, phi_copies,
    phi_printed,
};

use crate::error::{CliError, CliResult};

/// Names accepted in genus `g`.
pub fn names(genus: usize) -> Vec<String> {
    let mut out: Vec<String> =
        ["identity", "phi", "phi_printed", "slide_1_2", "non_handlebody"].iter().map(|s| s.to_string()).collect();
    for k in 1..=genus {
        out.push(format!("twist_a{k}"));
        out.push(format!("twist_b{k}"));
    }
    for k in 1..genus {
        out.push(format!("swap_{k}_{}", k + 1));
        out.push(format!("phi_swap_{k}_{}", k + 1));
    }
    out
}

fn handle(rest: &str) -> Option<usize> {
    rest.parse().ok()
}

pub fn lookup(name: &str, genus: usize) -> CliResult<MappingClassRep> {
    let unknown =
        || CliError::Usage(format!("unknown builtin `{name}`; known in genus {genus}: {}", names(genus).join(", ")));
    let m = match name {
        "identity" => MappingClassRep::identity(genus)?,
        "phi" => annulus_twist(genus)?,
        "phi_printed" => phi_printed(genus)?,
        "slide_1_2" => handle_slide(genus)?,
        "non_handlebody" => non_handlebody_example(genus)?,
        _ if name.starts_with("phi_swap_") => {
            phi_copies(genus)?.into_iter().find(|(n, _)| n == name).map(|(_, m)| m).ok_or_else(unknown)?
        }
        _ => {
            if let Some(k) = name.strip_prefix("twist_a").and_then(handle) {
                meridian_twist(genus, k)?
            } else if let Some(k) = name.strip_prefix("twist_b").and_then(handle) {
                longitude_twist(genus, k)?
            } else if let Some((k, l)) = name
                .strip_prefix("swap_")
                .and_then(|r| r.split_once('_'))
                .and_then(|(k, l)| Some((handle(k)?, handle(l)?)))
            {
                if l != k + 1 {
                    return Err(unknown());
                }
                handle_swap(genus, k)?
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(m)
}
