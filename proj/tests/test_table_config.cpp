// Copyright 2026 The Relaframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "relaframe/config.hpp"
#include "relaframe/experiments.hpp"
#include "relaframe/table.hpp"

using namespace relaframe;

namespace {

ResultTable sample_table() {
  ResultTable t;
  t.columns = {"param", "value"};
  t.meta = {{"experiment", "sample"}, {"version", kVersion}};
  t.plot_pairs = {{"param", "value"}};
  t.add_row({1.0, 0.1});
  t.add_row({2.0, 1.0 / 3.0});
  return t;
}

}  // namespace

TEST_CASE("emit_csv: header-only for empty tables, stable digits otherwise") {
  ResultTable empty;
  empty.columns = {"a", "b"};
  CHECK(emit_csv(empty) == "a,b\n");

  ResultTable t;
  t.columns = {"x", "y"};
  t.add_row({std::int64_t(3), 0.333333333333333});
  const std::string csv = emit_csv(t);
  CHECK(csv == "x,y\n3,0.333333333333\n");

  // 12 significant digits, %g trimming
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(1e-17) == "1e-17");
  CHECK(format_number(0.487943553243770) == "0.487943553244");
}

TEST_CASE("emit_csv: metadata block precedes the header") {
  const std::string csv = emit_csv(sample_table());
  CHECK(csv.rfind("# experiment = sample\n", 0) == 0);
  CHECK(csv.find("param,value\n") != std::string::npos);
  CHECK(csv.find("wall_time") == std::string::npos);
}

TEST_CASE("emit: identical tables emit identical bytes") {
  CHECK(emit(sample_table(), EmitFormat::csv) ==
        emit(sample_table(), EmitFormat::csv));
  CHECK(emit(sample_table(), EmitFormat::json) ==
        emit(sample_table(), EmitFormat::json));
  CHECK(emit(sample_table(), EmitFormat::plotdata) ==
        emit(sample_table(), EmitFormat::plotdata));
}

TEST_CASE("json round-trip: rows reproduce exactly") {
  ResultTable t;
  t.columns = {"i", "x", "tag"};
  t.meta = {{"experiment", "roundtrip"}};
  t.add_row({std::int64_t(-7), 0.1, std::string("alpha")});
  t.add_row({std::int64_t(1), 1e-300, std::string("beta,comma")});
  t.add_row({std::int64_t(0), 0.487943553243770, std::string("c")});

  const ResultTable back = parse_table_json(emit_json(t));
  REQUIRE(back.columns == t.columns);
  REQUIRE(back.rows.size() == t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      CHECK(back.rows[r][c] == t.rows[r][c]);
    }
  }
}

TEST_CASE("json round-trip: random tables reproduce rows exactly") {
  std::mt19937_64 gen(91);
  std::uniform_real_distribution<double> mag(-50.0, 50.0);
  std::uniform_int_distribution<int> expo(-200, 200);
  for (int trial = 0; trial < 20; ++trial) {
    ResultTable t;
    const int cols = 1 + int(gen() % 4);
    for (int c = 0; c < cols; ++c) t.columns.push_back("c" + std::to_string(c));
    const int rows = int(gen() % 6);
    for (int r = 0; r < rows; ++r) {
      std::vector<Cell> row;
      for (int c = 0; c < cols; ++c) {
        switch (gen() % 3) {
          case 0: row.emplace_back(std::int64_t(gen())); break;
          case 1:
            row.emplace_back(mag(gen) * std::pow(10.0, expo(gen)));
            break;
          default: row.emplace_back("s" + std::to_string(gen() % 100));
        }
      }
      t.add_row(std::move(row));
    }
    const ResultTable back = parse_table_json(emit_json(t));
    REQUIRE(back.rows.size() == t.rows.size());
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        CHECK(back.rows[r][c] == t.rows[r][c]);
      }
    }
  }
}

TEST_CASE("emit_plotdata: one block per declared curve") {
  const std::string plot = emit_plotdata(sample_table());
  CHECK(plot.find("# curve value vs param\n") != std::string::npos);
  CHECK(plot.find("1 0.1\n") != std::string::npos);
  CHECK(plot.find("2 0.333333333333\n") != std::string::npos);

  ResultTable no_pairs;
  no_pairs.columns = {"a"};
  no_pairs.add_row({1.0});
  CHECK(emit_plotdata(no_pairs).find("# no plot pairs declared") !=
        std::string::npos);
}

TEST_CASE("parse_config: minimal document materialises documented defaults") {
  const auto cfg = parse_config(
      R"({"experiment": "twirl-check", "dims": {"system": 4}})");
  CHECK(cfg.experiment == ExperimentId::twirl_check);
  CHECK(cfg.model == ModelKind::canonical);
  CHECK(cfg.d_system == 4);
  CHECK(cfg.d_reference == 64);
  CHECK(cfg.bins == 16);  // 4 * d_S
  CHECK(cfg.tol_witness == 1e-8);
  CHECK(cfg.output_path.empty());

  const auto echo = effective_config_json(cfg);
  CHECK(echo["dims"]["reference"] == 64);
  CHECK(echo["model"] == "canonical");
}

TEST_CASE("parse_config: malformed JSON raises ParseError") {
  CHECK_THROWS_AS(parse_config("{"), ParseError);
  CHECK_THROWS_AS(parse_config(""), ParseError);
}

TEST_CASE("parse_config: unknown experiment lists the valid ids") {
  try {
    parse_config(R"({"experiment": "warp", "dims": {"system": 2}})");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.issues().size() == 1);
    CHECK(e.issues()[0].find("warp") != std::string::npos);
    CHECK(e.issues()[0].find("twirl-check") != std::string::npos);
    CHECK(e.issues()[0].find("homodyne") != std::string::npos);
  }
}

TEST_CASE("parse_config: violations are aggregated with field paths") {
  try {
    parse_config(R"({
      "experiment": "convergence",
      "dims": {"system": -3, "reference": 0},
      "bins": 0,
      "sequence": {"kind": "wavelet", "values": []},
      "states": {"system": {"kind": "random"}},
      "tolerances": {"witness": -1.0, "magic": 2.0},
      "unknown_top": 1
    })");
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    const std::string all = e.what();
    CHECK(e.issues().size() >= 7);
    CHECK(all.find("dims.system") != std::string::npos);
    CHECK(all.find("dims.reference") != std::string::npos);
    CHECK(all.find("bins") != std::string::npos);
    CHECK(all.find("sequence.kind") != std::string::npos);
    CHECK(all.find("sequence.values") != std::string::npos);
    CHECK(all.find("states.system.seed") != std::string::npos);
    CHECK(all.find("tolerances.witness") != std::string::npos);
    CHECK(all.find("unknown key 'magic'") != std::string::npos);
    CHECK(all.find("unknown key 'unknown_top'") != std::string::npos);
  }
}

TEST_CASE("parse_config: level and dimension cross checks") {
  CHECK_THROWS_AS(parse_config(R"({
    "experiment": "mutual-coherence",
    "dims": {"system": 2, "reference": 4},
    "states": {"system": {"kind": "number-eigenstate", "n": 5}}
  })"),
                  ValidationError);

  CHECK_THROWS_AS(parse_config(R"({
    "experiment": "convergence",
    "model": "cyclic",
    "dims": {"system": 2, "reference": 8},
    "bins": 5
  })"),
                  ValidationError);

  // plus-superposition needs two levels
  CHECK_THROWS_AS(parse_config(R"({
    "experiment": "convergence",
    "dims": {"system": 1}
  })"),
                  ValidationError);
}

TEST_CASE("run: deterministic byte-identical CSV for a fixed config") {
  const auto cfg = parse_config(R"({
    "experiment": "twirl-check",
    "dims": {"system": 3, "reference": 8},
    "bins": 8
  })");
  const std::string a = emit_csv(run(cfg));
  const std::string b = emit_csv(run(cfg));
  CHECK(a == b);
  CHECK(a.find("# config = ") != std::string::npos);
}

TEST_CASE("run: twirl-check defects sit at rounding level") {
  const auto cfg = parse_config(R"({
    "experiment": "twirl-check",
    "dims": {"system": 4, "reference": 8},
    "states": {"reference": {"kind": "coherent", "beta": 2.0}}
  })");
  const ResultTable t = run(cfg);
  CHECK(t.rows.size() == 20);
  for (double d : t.numeric_column("defect")) CHECK(d < 1e-10);
}

TEST_CASE("run: mutual-coherence verdicts") {
  const auto incoherent = run(parse_config(R"({
    "experiment": "mutual-coherence",
    "dims": {"system": 3, "reference": 3},
    "states": {"system": {"kind": "number-eigenstate", "n": 1}}
  })"));
  CHECK(std::get<std::string>(incoherent.rows[0][2]) == "mutually-incoherent");
  CHECK(std::get<double>(incoherent.rows[0][0]) < 1e-8);

  const auto coherent_pair = run(parse_config(R"({
    "experiment": "mutual-coherence",
    "dims": {"system": 2, "reference": 2},
    "states": {"system": {"kind": "plus-superposition"},
               "reference": {"kind": "plus-superposition"}}
  })"));
  CHECK(std::get<std::string>(coherent_pair.rows[0][2]) == "mutually-coherent");
}

TEST_CASE("run: convergence default sweep has four rows with equal columns") {
  const auto cfg = parse_config(R"({
    "experiment": "convergence",
    "dims": {"system": 2},
    "bins": 16
  })");
  const ResultTable t = run(cfg);
  REQUIRE(t.rows.size() == 4);
  const auto e4 = t.numeric_column("err_restriction");
  const auto e5 = t.numeric_column("err_relational");
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(e4[i] - e5[i]) < 1e-10);
  CHECK(e4[1] < e4[0]);
  CHECK(e4[2] < e4[1]);
}

TEST_CASE("run: structure-suite passes across both models") {
  for (const char* model : {"canonical", "cyclic"}) {
    const auto cfg = parse_config(
        std::string(R"({"experiment": "structure-suite", "model": ")") +
        model + R"(", "dims": {"system": 3, "reference": 4}})");
    const ResultTable t = run(cfg);
    CHECK(t.rows.size() >= 9);
    for (const auto& row : t.rows) {
      INFO(std::get<std::string>(row[0]));
      CHECK(std::get<std::string>(row[3]) == "yes");
    }
  }
}

TEST_CASE("run: domain failures carry the experiment context") {
  // homodyne with a system dimension too small for the coherent amplitude
  const auto cfg = parse_config(R"({
    "experiment": "homodyne",
    "dims": {"system": 4, "reference": 8},
    "states": {"system": {"kind": "coherent", "beta": 2.0}}
  })");
  try {
    run(cfg);
    FAIL("expected ExperimentError");
  } catch (const ExperimentError& e) {
    CHECK(std::string(e.what()).find("homodyne") != std::string::npos);
  }
}

TEST_CASE("list_experiments: covers every dispatchable id") {
  const auto infos = list_experiments();
  REQUIRE(infos.size() == experiment_names().size());
  for (const auto& [id, name] : experiment_names()) {
    bool found = false;
    for (const auto& info : infos) found |= info.id == name;
    CHECK(found);
  }
}
