use std::path::Path;

use serde_json::Value;

use crate::CliError;

/// Text starting with `{` or `[` is inline JSON; anything else is a file path.
pub fn read_json_arg(arg: &str) -> Result<Value, CliError> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg))
            .map_err(|e| CliError::Input(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("malformed JSON in {}: {e}", short(arg))))
}

fn short(arg: &str) -> String {
    if arg.len() > 40 {
        format!("{}…", &arg[..arg.char_indices().nth(40).map_or(arg.len(), |(i, _)| i)])
    } else {
        arg.to_string()
    }
}
