#include <doctest.h>

#include <nlohmann/json.hpp>

#include "qpc/errors.hpp"
#include "qpc/json_io.hpp"
#include "qpc/measurement.hpp"

using namespace qpc;

namespace {

ErrorTableSet load_benchmark() {
  return tables_from_json(load_json(std::string(QPC_DATA_DIR) +
                                    "/oka05_cnot.json"));
}

ErrorTableSet identity_tables(int n_qubits) {
  ErrorTableSet t;
  t.n_qubits = n_qubits;
  const int d = t.dim();
  // Column 0 is the no-flip pattern, so an ideal gate has first-column ones.
  t.z_table = Eigen::MatrixXd::Zero(d, d);
  t.z_table.col(0).setOnes();
  t.x_table = t.z_table;
  return t;
}

}  // namespace

TEST_CASE("benchmark column means reproduce the published averages") {
  const ComplementarySummary s = summarize(load_benchmark());
  REQUIRE(s.n_qubits == 2);
  // Exact column means of the bundled 3-decimal tables.
  const double pz[] = {0.85300, 0.05125, 0.05175, 0.04425};
  const double px[] = {0.86725, 0.03350, 0.07075, 0.02825};
  for (int f = 0; f < 4; ++f) {
    CAPTURE(f);
    CHECK(s.p_z(f) == doctest::Approx(pz[f]).epsilon(1e-12));
    CHECK(s.p_x(f) == doctest::Approx(px[f]).epsilon(1e-12));
  }
  CHECK(s.fidelity_z() == doctest::Approx(0.853).epsilon(1e-12));
  CHECK(s.fidelity_x() == doctest::Approx(0.86725).epsilon(1e-12));
}

TEST_CASE("ideal tables summarize to unit fidelity") {
  const ComplementarySummary s = summarize(identity_tables(2));
  CHECK(s.fidelity_z() == 1.0);
  CHECK(s.fidelity_x() == 1.0);
  CHECK(s.p_z.tail(3).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("table validation catches shape, range and row-sum violations") {
  ErrorTableSet t = identity_tables(2);
  CHECK_NOTHROW(validate_tables(t));

  SUBCASE("wrong shape") {
    t.z_table = Eigen::MatrixXd::Zero(3, 4);
    CHECK_THROWS_WITH_AS(validate_tables(t),
                         doctest::Contains("z_table must be 4x4"),
                         ValidationError);
  }
  SUBCASE("negative entry") {
    t.x_table(1, 1) = -0.01;
    t.x_table(1, 0) = 1.01;
    CHECK_THROWS_WITH_AS(validate_tables(t), doctest::Contains("out of [0,1]"),
                         ValidationError);
  }
  SUBCASE("entry above one") {
    t.z_table(0, 0) = 1.5;
    CHECK_THROWS_AS(validate_tables(t), ValidationError);
  }
  SUBCASE("row sum breaks tolerance and the message names the input") {
    t.z_table(2, 0) = 0.9;  // row 2 now sums to 0.9
    CHECK_THROWS_WITH_AS(validate_tables(t), doctest::Contains("input 10"),
                         ValidationError);
  }
  SUBCASE("bad qubit count") {
    t.n_qubits = 0;
    CHECK_THROWS_AS(validate_tables(t), ValidationError);
  }
}

TEST_CASE("default tolerance admits three-decimal rows, strict does not") {
  const ErrorTableSet t = load_benchmark();  // rows sum to 0.999 / 1.001
  CHECK_NOTHROW(validate_tables(t));
  CHECK_THROWS_WITH_AS(validate_tables(t, TableTolerances::strict()),
                       doctest::Contains("sums to"), ValidationError);
}

TEST_CASE("row renormalization makes strict validation pass") {
  const ErrorTableSet t = renormalize_rows(load_benchmark());
  CHECK_NOTHROW(validate_tables(t, TableTolerances::strict()));
  CHECK(t.metadata.find("renormalized") != std::string::npos);
  for (int r = 0; r < 4; ++r) {
    CHECK(t.z_table.row(r).sum() == doctest::Approx(1.0).epsilon(1e-15));
  }

  ErrorTableSet zero = t;
  zero.z_table.row(1).setZero();
  CHECK_THROWS_AS(renormalize_rows(zero), ValidationError);
}

TEST_CASE("summary construction checks shape, sign and normalization") {
  Eigen::VectorXd good(4);
  good << 0.9, 0.05, 0.03, 0.02;
  CHECK_NOTHROW(make_summary(2, good, good));

  Eigen::VectorXd short_vec(3);
  short_vec << 0.9, 0.05, 0.05;
  CHECK_THROWS_AS(make_summary(2, short_vec, good), ValidationError);

  Eigen::VectorXd negative = good;
  negative(1) = -0.05;
  negative(0) = 1.0;
  CHECK_THROWS_AS(make_summary(2, good, negative), ValidationError);

  Eigen::VectorXd off = good;
  off(0) = 0.95;  // sums to 1.05
  CHECK_THROWS_AS(make_summary(2, off, good), ValidationError);
  CHECK_NOTHROW(make_summary(2, off, good, 0.1));  // relaxed tolerance
}

TEST_CASE("rounding the summary reproduces printed three-decimal values") {
  const ComplementarySummary s = rounded_summary(summarize(load_benchmark()));
  const double pz[] = {0.853, 0.051, 0.052, 0.044};
  const double px[] = {0.867, 0.034, 0.071, 0.028};
  for (int f = 0; f < 4; ++f) {
    CAPTURE(f);
    CHECK(s.p_z(f) == doctest::Approx(pz[f]).epsilon(1e-15));
    CHECK(s.p_x(f) == doctest::Approx(px[f]).epsilon(1e-15));
  }
}

TEST_CASE("input labels use binary with the first qubit leftmost") {
  CHECK(input_label(1, 0) == "0");
  CHECK(input_label(1, 1) == "1");
  CHECK(input_label(2, 2) == "10");
  CHECK(input_label(3, 5) == "101");
}

TEST_CASE("table JSON round trip preserves every field") {
  const ErrorTableSet t = load_benchmark();
  const ErrorTableSet back = tables_from_json(tables_to_json(t));
  CHECK(back.n_qubits == t.n_qubits);
  CHECK((back.z_table - t.z_table).cwiseAbs().maxCoeff() == 0.0);
  CHECK((back.x_table - t.x_table).cwiseAbs().maxCoeff() == 0.0);
  CHECK(back.metadata == t.metadata);
}

TEST_CASE("table JSON schema violations are reported by field") {
  using nlohmann::json;
  const std::string dir = QPC_TEST_DATA_DIR;

  CHECK_THROWS_WITH_AS(
      tables_from_json(load_json(dir + "/bad_missing_field.json")),
      doctest::Contains("x_table"), ValidationError);
  CHECK_THROWS_WITH_AS(tables_from_json(load_json(dir + "/bad_shape.json")),
                       doctest::Contains("z_table"), ValidationError);
  CHECK_THROWS_AS(
      tables_from_json(load_json(dir + "/bad_negative_entry.json")),
      ValidationError);
  CHECK_THROWS_AS(tables_from_json(load_json(dir + "/bad_row_sum.json")),
                  ValidationError);

  json doc = tables_to_json(identity_tables(1));
  doc["n_qubits"] = "two";
  CHECK_THROWS_WITH_AS(tables_from_json(doc), doctest::Contains("n_qubits"),
                       ValidationError);
  doc["n_qubits"] = 99;
  CHECK_THROWS_AS(tables_from_json(doc), ValidationError);

  json nonnum = tables_to_json(identity_tables(1));
  nonnum["z_table"][0][0] = "high";
  CHECK_THROWS_WITH_AS(tables_from_json(nonnum),
                       doctest::Contains("not a number"), ValidationError);

  CHECK_THROWS_WITH_AS(load_json("/nonexistent/nowhere.json"),
                       doctest::Contains("cannot open"), ValidationError);
}
