use p2walls_cli::{run, MAX_LEVEL_ENV};

// Kept in its own binary: the environment is process-wide.
#[test]
fn max_level_env_overrides_flag() {
    std::env::set_var(MAX_LEVEL_ENV, "bogus");
    let out = run(["p2walls", "exc", "1/2"]);
    std::env::remove_var(MAX_LEVEL_ENV);
    assert_eq!(out.code, 1);
}
