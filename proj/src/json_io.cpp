#include "starcong/json_io.hpp"

#include <fstream>
#include <sstream>

namespace starcong {

namespace {

const Json& expect_member(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

double expect_number(const Json& j, const char* key, const std::string& where) {
  const Json& v = expect_member(j, key, where);
  if (!v.is_number()) throw ParseError(where + ": \"" + key + "\" must be a number");
  return v.get<double>();
}

int expect_positive_int(const Json& j, const char* key, const std::string& where) {
  const Json& v = expect_member(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ParseError(where + ": \"" + key + "\" must be a positive integer");
  }
  return v.get<int>();
}

}  // namespace

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const Matrix& a) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
    data.push_back(std::move(row));
  }
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

Json to_json(const CanonicalBlock& b) {
  switch (b.kind) {
    case BlockKind::H:
      return Json{{"kind", "H"}, {"size", b.size}, {"lambda", to_json(b.lambda)}};
    case BlockKind::Delta:
      return Json{{"kind", "Delta"}, {"size", b.size}, {"mu", to_json(b.mu)}};
    case BlockKind::Jordan:
      return Json{{"kind", "Jordan"}, {"size", b.size}};
  }
  throw RejectedInput("block to_json: unknown kind");
}

Json to_json(const CanonicalSpec& spec) {
  Json blocks = Json::array();
  for (const auto& b : spec.blocks) blocks.push_back(to_json(b));
  return Json{{"blocks", std::move(blocks)}};
}

Json to_json(const Pattern& p) {
  Json rows = Json::array();
  for (int i = 0; i < p.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < p.cols; ++j) {
      switch (p.at(i, j)) {
        case PatternEntry::Zero: row.push_back("zero"); break;
        case PatternEntry::Star: row.push_back("star"); break;
        case PatternEntry::Circle: row.push_back("circle"); break;
        case PatternEntry::Bullet: row.push_back("bullet"); break;
      }
    }
    rows.push_back(std::move(row));
  }
  return Json{{"rows", p.rows}, {"cols", p.cols}, {"entries", std::move(rows)}};
}

Json to_json(const DecompositionReport& r) {
  return Json{{"n", r.n},
              {"tangent_rank", r.tangent_rank},
              {"pattern_params", r.pattern_params},
              {"combined_rank", r.combined_rank},
              {"passed", r.passed},
              {"tolerance", r.tolerance},
              {"sigma_min_kept", r.sigma_min_kept},
              {"sigma_max_dropped", r.sigma_max_dropped}};
}

Json to_json(const GreedyResult& g) {
  Json j = to_json(g.pattern);
  j["tangent_rank"] = g.tangent_rank;
  return j;
}

Json to_json(const ReductionResult& r) {
  return Json{{"s", to_json(r.s)},
              {"d", to_json(r.d)},
              {"iterations", r.iterations},
              {"off_pattern_residual", r.off_pattern_residual},
              {"converged", r.converged}};
}

Json to_json(const HermitianPair& hk) {
  return Json{{"h", to_json(hk.h)}, {"k", to_json(hk.k)}};
}

Complex complex_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("complex value: object with \"re\"/\"im\" expected");
  const Complex z(expect_number(j, "re", "complex value"),
                  expect_number(j, "im", "complex value"));
  if (!is_finite(z)) throw RejectedInput("complex value: entries must be finite");
  return z;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix: object expected");
  const int rows = expect_positive_int(j, "rows", "matrix");
  const int cols = expect_positive_int(j, "cols", "matrix");
  const Json& data = expect_member(j, "data", "matrix");
  if (!data.is_array() || data.size() != static_cast<size_t>(rows)) {
    throw ParseError("matrix: \"data\" must hold one array per row");
  }
  Matrix a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = data[i];
    if (!row.is_array() || row.size() != static_cast<size_t>(cols)) {
      throw ParseError("matrix: row " + std::to_string(i + 1) + " must hold " +
                       std::to_string(cols) + " entries");
    }
    for (int jj = 0; jj < cols; ++jj) a(i, jj) = complex_from_json(row[jj]);
  }
  return a;
}

CanonicalBlock block_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("block: object expected");
  const Json& kind = expect_member(j, "kind", "block");
  if (!kind.is_string()) throw ParseError("block: \"kind\" must be a string");
  const std::string name = kind.get<std::string>();
  const int size = expect_positive_int(j, "size", "block");
  if (name == "H") return CanonicalBlock::h(size, complex_from_json(expect_member(j, "lambda", "H block")));
  if (name == "Delta") return CanonicalBlock::delta(size, complex_from_json(expect_member(j, "mu", "Delta block")));
  if (name == "Jordan") return CanonicalBlock::jordan(size);
  throw ParseError("block: unknown kind \"" + name + "\"");
}

CanonicalSpec spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("spec: object expected");
  const Json& blocks = expect_member(j, "blocks", "spec");
  if (!blocks.is_array() || blocks.empty()) {
    throw ParseError("spec: \"blocks\" must be a non-empty array");
  }
  std::vector<CanonicalBlock> parsed;
  parsed.reserve(blocks.size());
  for (const Json& b : blocks) parsed.push_back(block_from_json(b));
  return CanonicalSpec::of(std::move(parsed));
}

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

Matrix load_matrix_file(const std::string& path) { return matrix_from_json(load_json_file(path)); }

CanonicalSpec load_spec_file(const std::string& path) { return spec_from_json(load_json_file(path)); }

}  // namespace starcong
