use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());

    let config = cbindgen::Config {
        language: cbindgen::Language::C,
        cpp_compat: true,
        include_guard: Some("IRC_GDOF_H".into()),
        header: Some(
            "/* C interface to the irc-gdof toolkit: GDoF, capacity bounds, and FDF\n\
             \x20  rates of the symmetric Gaussian interference relay channel. */"
                .into(),
        ),
        documentation: true,
        enumeration: cbindgen::EnumConfig {
            prefix_with_name: true,
            rename_variants: cbindgen::RenameRule::ScreamingSnakeCase,
            ..Default::default()
        },
        ..Default::default()
    };

    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("failed to generate the C header")
        .write_to_file(crate_dir.join("include").join("irc_gdof.h"));

    println!("cargo:rerun-if-changed=src/lib.rs");
}
