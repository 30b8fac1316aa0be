#![no_main]

use floquet_kapitza::cli::parse_config_str;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(config) = parse_config_str(text) {
        let echo = config.to_toml();
        let back = parse_config_str(&echo).expect("echoed config parses");
        assert_eq!(back, config);
        assert_eq!(back.to_toml(), echo);
    }
});
