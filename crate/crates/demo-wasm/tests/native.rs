use schroder_demo_wasm::{encode_partition, psi_path, series_coefficients, MAX_INPUT};

#[test]
fn encodes_worked_example() {
    let d = encode_partition("11232343411", "12312").unwrap();
    assert_eq!(d.path, "HUUUDUUDDHUUDDHDD");
    assert!(d.svg.starts_with("<svg"));
    assert_eq!(d.svg.matches("<line class=\"step-").count(), 17);
    assert_eq!(encode_partition("1,2,1", "12321").unwrap().path, "UUDD");
}

#[test]
fn encode_reports_errors() {
    assert!(encode_partition("12312", "12312").unwrap_err().contains("12312"));
    assert!(encode_partition("21", "12312").is_err());
    assert!(encode_partition("1", "123").is_err());
    let long = "1".repeat(MAX_INPUT + 1);
    assert!(encode_partition(&long, "12312").unwrap_err().contains("at most"));
}

#[test]
fn psi_examples() {
    assert_eq!(psi_path("UUDD").unwrap().path, "UHD");
    assert!(psi_path("UHD").is_err());
}

#[test]
fn series_strings() {
    assert_eq!(series_coefficients("f", 5).unwrap(), ["1", "2", "5", "15", "51", "188"]);
    assert_eq!(series_coefficients("f-prime", 3).unwrap(), ["1", "1", "2", "6"]);
    assert!(series_coefficients("f", 1000).is_err());
    assert!(series_coefficients("g", 3).is_err());
}
