#![no_main]

use floquet_kapitza::cli::{parse_config_str, CliError};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    match parse_config_str(text) {
        Ok(config) => assert!(config.validate().is_ok()),
        Err(e) => {
            assert_eq!(e.exit_code(), 2);
            if let CliError::Parse { line: Some(line), .. } = &e {
                assert!(*line >= 1 && *line <= text.lines().count().max(1) + 1);
            }
            let _ = e.to_json();
        }
    }
});
