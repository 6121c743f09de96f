use std::path::PathBuf;

fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("set by cargo");
    let out = PathBuf::from(&crate_dir).join("include").join("triarea.h");
    println!("cargo:rerun-if-changed=src/lib.rs");
    let config = cbindgen::Config {
        language: cbindgen::Language::C,
        include_guard: Some("TRIAREA_H".into()),
        cpp_compat: true,
        enumeration: cbindgen::EnumConfig { prefix_with_name: true, ..Default::default() },
        ..Default::default()
    };
    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("unable to generate C bindings")
        .write_to_file(out);
}
