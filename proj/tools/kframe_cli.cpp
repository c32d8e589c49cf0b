// Command line front end: reads a JSON document describing spaces, vector
// families, operators and specs, runs one library operation and writes a
// JSON result. Exit codes: 0 success, 1 input/usage error, 2 mathematically
// negative outcome (not a frame, infeasible, degenerate, mismatched).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kframe/coupling.hpp"
#include "kframe/document.hpp"
#include "kframe/errors.hpp"
#include "kframe/linalg.hpp"

using json = nlohmann::json;
using namespace kframe;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw DocumentError("cannot open output file: " + path);
  out << text;
}

json complex_pair(const complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_rows(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_pair(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json family_vectors(const VectorFamily& f) {
  json vectors = json::array();
  for (std::size_t n = 0; n < f.k(); ++n) {
    json vec = json::array();
    for (std::size_t i = 0; i < f.space.dim(); ++i)
      vec.push_back(complex_pair(f.synthesis(i, n)));
    vectors.push_back(std::move(vec));
  }
  return vectors;
}

json bounds_json(const ValidationResult& r) {
  json out;
  out["is_frame"] = r.is_frame;
  out["rank"] = r.rank;
  if (r.is_frame) {
    out["A"] = r.bounds.lower;
    out["B"] = r.bounds.upper;
    out["tight"] = r.bounds.tight;
    out["exact"] = r.bounds.exact;
  }
  return out;
}

json majorization_json(const MajorizationReport& rep) {
  json out;
  out["partial_ok"] = rep.partial_ok;
  out["trace_lhs"] = rep.trace_lhs;
  out["trace_rhs"] = rep.trace_rhs;
  out["trace_balanced"] = rep.trace_balanced;
  out["totals_dominated"] = rep.totals_dominated;
  out["feasible"] = rep.feasible;
  return out;
}

FrameFlavor parse_flavor(const std::string& s) {
  if (s == "hilbert") return FrameFlavor::HilbertFrame;
  if (s == "pontryagin") return FrameFlavor::PontryaginFrame;
  if (s == "jfam-pontryagin") return FrameFlavor::JFamilyPontryagin;
  if (s == "jfam-hilbert") return FrameFlavor::JFamilyHilbert;
  throw CLI::ValidationError("--flavor", "unknown flavor: " + s);
}

int run(int argc, char** argv) {
  CLI::App app{"frame computations on finite-dimensional indefinite-product spaces"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output = "-";
  std::string flavor_name = "hilbert";
  double tol = kRankTol;
  long long seed = 0;  // reserved for scripted reproducibility, the library is deterministic
  app.add_option("--input", input, "input document file, or - for stdin");
  app.add_option("--output", output, "output file, or - for stdout");
  app.add_option("--tol", tol, "rank tolerance override");
  app.add_option("--seed", seed, "seed echoed into the run (library ops are deterministic)");

  std::string family_name, family_b_name, operator_name, norms_name;
  auto* validate_cmd = app.add_subcommand("validate", "frame test with optimal bounds");
  validate_cmd->fallthrough();
  validate_cmd->add_option("family", family_name)->required();

  auto* construct_cmd =
      app.add_subcommand("construct", "frame with prescribed operator and norms");
  construct_cmd->fallthrough();
  construct_cmd->add_option("--operator", operator_name)->required();
  construct_cmd->add_option("--norms", norms_name)->required();
  construct_cmd->add_option("--flavor", flavor_name,
                            "hilbert|pontryagin|jfam-pontryagin|jfam-hilbert");

  auto* extend_cmd = app.add_subcommand("extend", "dilate a frame to a larger space");
  extend_cmd->fallthrough();
  extend_cmd->add_option("family", family_name)->required();

  auto* couple_cmd = app.add_subcommand("couple", "couple two frames on a product space");
  couple_cmd->fallthrough();
  couple_cmd->add_option("familyA", family_name)->required();
  couple_cmd->add_option("familyB", family_b_name)->required();

  auto* similar_cmd = app.add_subcommand("similar", "similarity test with intertwiner");
  similar_cmd->fallthrough();
  similar_cmd->add_option("familyA", family_name)->required();
  similar_cmd->add_option("familyB", family_b_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const Document doc = parse_document(read_input(input));
  json result;
  int code = 0;

  if (*validate_cmd) {
    const VectorFamily f = doc.family(family_name);
    const ValidationResult r = validate(f, tol);
    result = bounds_json(r);
    code = r.is_frame ? 0 : 2;
  } else if (*construct_cmd) {
    const auto& op = doc.op(operator_name);
    if (op.space.empty())
      throw DocumentError("operators." + operator_name + ": a space name is required");
    const PontryaginSpace& sp = doc.space(op.space);
    const auto& spec = doc.spec(norms_name);
    if (spec.norms.empty())
      throw DocumentError("specs." + norms_name + ": a norms spec is required");
    const NormSpec norms = make_norms(spec.norms);

    auto eig = hermitian_eig(op.matrix);
    const auto report = check_majorization(make_spectrum(eig.values), norms);
    if (!report.feasible) {
      result["majorization"] = majorization_json(report);
      code = 2;
    } else {
      const VectorFamily built =
          construct_frame(sp, op.matrix, norms, parse_flavor(flavor_name));
      Document out;
      out.spaces.emplace(op.space, sp);
      out.families.emplace("constructed", Document::FamilyEntry{op.space, built.synthesis});
      write_output(output, emit_document(out));
      return 0;
    }
  } else if (*extend_cmd) {
    const Dilation d = dilate(doc.family(family_name));
    result["big_space"] = {{"signature", d.big_space.signature()}};
    result["dilated_family"] = family_vectors(d.big_frame);
    result["projector"] = matrix_rows(d.projector);
    result["embedding"] = d.embedding;
  } else if (*couple_cmd) {
    const Coupling c = couple_frames(doc.family(family_name), doc.family(family_b_name));
    result["big_space"] = {{"signature", c.big_space.space.signature()}};
    result["coupled_family"] = family_vectors(c.coupled_frame);
    result["projector_k"] = matrix_rows(c.projector_k);
    result["projector_h"] = matrix_rows(c.projector_h);
  } else if (*similar_cmd) {
    const SimilarityResult r =
        are_similar(doc.family(family_name), doc.family(family_b_name));
    result["similar"] = r.similar;
    result["range_dim_f"] = r.range_dim_f;
    result["range_dim_g"] = r.range_dim_g;
    if (r.similar) result["intertwiner"] = matrix_rows(r.intertwiner);
    code = r.similar ? 0 : 2;
  }

  write_output(output, result.dump(2) + "\n");
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NotMajorized& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const DegenerateSubspace& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const NotFrameError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const KMismatch& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
