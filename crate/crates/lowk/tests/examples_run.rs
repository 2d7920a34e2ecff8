//! Runs every example's `run_example`.

#[allow(dead_code)]
mod amalgam_normal_form {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/amalgam_normal_form.rs"));
}

#[test]
fn amalgam_normal_form_runs() {
    amalgam_normal_form::run_example().expect("amalgam_normal_form example should run");
}

#[allow(dead_code)]
mod b4_model {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/b4_model.rs"));
}

#[test]
fn b4_model_runs() {
    b4_model::run_example().expect("b4_model example should run");
}

#[allow(dead_code)]
mod b4_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/b4_report.rs"));
}

#[test]
fn b4_report_runs() {
    b4_report::run_example().expect("b4_report example should run");
}

#[allow(dead_code)]
mod b4_verify {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/b4_verify.rs"));
}

#[test]
fn b4_verify_runs() {
    b4_verify::run_example().expect("b4_verify example should run");
}

#[allow(dead_code)]
mod bass_heller_swan {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bass_heller_swan.rs"));
}

#[test]
fn bass_heller_swan_runs() {
    bass_heller_swan::run_example().expect("bass_heller_swan example should run");
}

#[allow(dead_code)]
mod classify {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/classify.rs"));
}

#[test]
fn classify_runs() {
    classify::run_example().expect("classify example should run");
}

#[allow(dead_code)]
mod conjugacy_census {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/conjugacy_census.rs"));
}

#[test]
fn conjugacy_census_runs() {
    conjugacy_census::run_example().expect("conjugacy_census example should run");
}

#[allow(dead_code)]
mod f_conjugacy {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/f_conjugacy.rs"));
}

#[test]
fn f_conjugacy_runs() {
    f_conjugacy::run_example().expect("f_conjugacy example should run");
}

#[allow(dead_code)]
mod finite_groups {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/finite_groups.rs"));
}

#[test]
fn finite_groups_runs() {
    finite_groups::run_example().expect("finite_groups example should run");
}

#[allow(dead_code)]
mod free_product_words {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/free_product_words.rs"));
}

#[test]
fn free_product_words_runs() {
    free_product_words::run_example().expect("free_product_words example should run");
}

#[allow(dead_code)]
mod galois_image {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/galois_image.rs"));
}

#[test]
fn galois_image_runs() {
    galois_image::run_example().expect("galois_image example should run");
}

#[allow(dead_code)]
mod group_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/group_report.rs"));
}

#[test]
fn group_report_runs() {
    group_report::run_example().expect("group_report example should run");
}

#[allow(dead_code)]
mod k0_lookup {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/k0_lookup.rs"));
}

#[test]
fn k0_lookup_runs() {
    k0_lookup::run_example().expect("k0_lookup example should run");
}

#[allow(dead_code)]
mod k_minus_one {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/k_minus_one.rs"));
}

#[test]
fn k_minus_one_runs() {
    k_minus_one::run_example().expect("k_minus_one example should run");
}

#[allow(dead_code)]
mod reidemeister_schreier {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reidemeister_schreier.rs"));
}

#[test]
fn reidemeister_schreier_runs() {
    reidemeister_schreier::run_example().expect("reidemeister_schreier example should run");
}

#[allow(dead_code)]
mod wedderburn {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/wedderburn.rs"));
}

#[test]
fn wedderburn_runs() {
    wedderburn::run_example().expect("wedderburn example should run");
}

#[allow(dead_code)]
mod whitehead {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/whitehead.rs"));
}

#[test]
fn whitehead_runs() {
    whitehead::run_example().expect("whitehead example should run");
}
