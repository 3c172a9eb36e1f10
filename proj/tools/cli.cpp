#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quasibraid/braid_rep.hpp"
#include "quasibraid/cut_project.hpp"
#include "quasibraid/error.hpp"
#include "quasibraid/physics_states.hpp"
#include "quasibraid/qc_compile.hpp"
#include "quasibraid/substitution.hpp"
#include "quasibraid/tl_algebra.hpp"

namespace quasibraid::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "quasibraid/1";

struct Options {
  std::string format = "json";

  long radius = 50;
  double shift = 0.0;
  double scale = 1.0;

  std::string seed = "L";
  unsigned depth = 2;

  unsigned levels = 4;

  std::string what = "tl";
  int qubits = 3;
  int root_index = 0;
  int r = 5;
  double tol = 1e-12;

  std::string word;
  std::size_t pair = 0;

  std::string rep = "rho";
  std::string target;
  std::string target_file;
  int max_length = 6;

  std::string circuit_file;
  std::size_t initial = 0;
};

struct Outcome {
  Json result;
  int exit_code = kExitOk;
  std::string dot;  // only for `bratteli --format dot`
};

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json state_json(const StateVector& v) {
  Json a = Json::array();
  for (const auto& z : v.amplitudes()) a.push_back(complex_json(z));
  return a;
}

Json word_json(const BraidWord& w) {
  Json a = Json::array();
  for (const auto& l : w.letters) a.push_back(Json::array({l.generator, l.exponent}));
  return a;
}

Json relation_json(const RelationReport& report) {
  return Json::parse(to_json(report).dump());
}

std::string big(const BigInt& v) { return v.str(); }

BraidRepresentation select_representation(const Options& o) {
  if (o.rep == "fr") return fr_representation();
  const auto tl = build_tl_generators(QParameter(o.r), o.qubits);
  return rho_representation(ADeformation::canonical(o.root_index), tl);
}

BraidWord parse_word(const Json& j, int strand_count) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "braid word must be a JSON array");
  std::vector<BraidLetter> letters;
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() ||
        !l[1].is_number_integer()) {
      throw Error(ErrorCode::parse_error, "braid letter must be [n, exp]");
    }
    letters.push_back({l[0].get<int>(), l[1].get<int>()});
  }
  return make_braid_word(strand_count, std::move(letters));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse_error, path + ": " + e.what());
  }
}

ComplexMatrix parse_matrix(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw Error(ErrorCode::parse_error, "matrix file needs {\"dim\", \"entries\"}");
  }
  const auto dim = j["dim"].get<std::size_t>();
  std::vector<Complex> entries;
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 2) {
      throw Error(ErrorCode::parse_error, "matrix entry must be [re, im]");
    }
    entries.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return ComplexMatrix(dim, std::move(entries));
}

ComplexMatrix named_target(const std::string& name, const BraidRepresentation& rep) {
  if (name == "identity") return ComplexMatrix::identity(rep.dim());
  const auto generator_at = [&](const std::string& digits) -> const BraidGenerator& {
    std::size_t k = 0;
    try {
      k = std::stoul(digits);
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument, "unknown target '" + name + "'");
    }
    if (k < 1 || k > rep.size()) {
      throw Error(ErrorCode::invalid_argument, "target generator out of range: " + name);
    }
    return rep.generators[k - 1];
  };
  if (name.rfind("gen", 0) == 0) return generator_at(name.substr(3)).forward;
  if (name.rfind("inv", 0) == 0) return generator_at(name.substr(3)).inverse;
  if (rep.id == "fibonacci_FR") {
    const auto fr = fibonacci_FR();
    if (name == "R") return fr.R;
    if (name == "B") return fr.B;
    if (name == "F") return fr.F;
  }
  throw Error(ErrorCode::invalid_argument, "unknown target '" + name + "'");
}

Outcome cmd_generate(const Options& o) {
  const auto scheme = canonical_fibonacci_scheme(o.shift, o.scale);
  const auto points = project_points(scheme, o.radius);
  const auto word = extract_word(points);
  const auto st = tile_statistics(word);

  Json pts = Json::array();
  Json lattice = Json::array();
  for (std::size_t i = 0; i < points.points.size(); ++i) {
    pts.push_back(points.points[i]);
    lattice.push_back(
        Json::array({points.source_lattice_points[i].m, points.source_lattice_points[i].n}));
  }
  Json result;
  result["scheme"] = {{"slope", scheme.slope()},
                      {"window", Json::array({scheme.window_lo(), scheme.window_hi()})},
                      {"shift", scheme.shift()},
                      {"scale", scheme.scale()}};
  result["point_count"] = points.points.size();
  result["boundary_hits"] = points.boundary_hits;
  result["word"] = word.letters();
  result["fibonacci_patch"] = is_fibonacci_patch(word);
  result["count_L"] = st.count_long;
  result["count_S"] = st.count_short;
  result["ratio"] = st.ratio ? Json(*st.ratio) : Json(nullptr);
  result["points"] = std::move(pts);
  result["lattice_points"] = std::move(lattice);
  return {std::move(result)};
}

Outcome cmd_tilings(const Options& o) {
  const auto words = enumerate_tilings(TilingWord(o.seed), o.depth);
  Json list = Json::array();
  for (const auto& w : words) list.push_back(w.letters());
  Json result;
  result["count"] = words.size();
  if (o.seed == "L") result["fib_n_plus_2"] = big(fibonacci(o.depth + 2));
  result["words"] = std::move(list);
  return {std::move(result)};
}

Outcome cmd_bratteli(const Options& o) {
  const auto diagram = build_bratteli(o.levels);
  const auto ladder = af_dimensions(o.levels);
  Outcome out;
  if (o.format == "dot") {
    out.dot = bratteli_to_dot(diagram);
    return out;
  }
  Json levels = Json::array();
  for (unsigned lvl = 1; lvl <= diagram.levels; ++lvl) {
    const auto& c = diagram.at(lvl);
    const auto& d = ladder[lvl - 1];
    levels.push_back({{"level", lvl},
                      {"paths_L", big(c.paths_long)},
                      {"paths_S", big(c.paths_short)},
                      {"af_d_L", big(d.d_long)},
                      {"af_d_S", big(d.d_short)}});
  }
  const auto& m = diagram.edge_multiplicity;
  out.result["edges"] = {{"L->L", m[0][0]}, {"L->S", m[0][1]}, {"S->L", m[1][0]}, {"S->S", m[1][1]}};
  out.result["levels"] = std::move(levels);
  return out;
}

Outcome cmd_verify(const Options& o) {
  Outcome out;
  RelationReport report;
  if (o.what == "tl") {
    const auto tl = build_tl_generators(QParameter(o.r), o.qubits);
    report = verify_tl_relations(tl, o.tol);
    out.result["two_q"] = q_number(2, tl.q);
  } else if (o.what == "braid") {
    const auto a = ADeformation::canonical(o.root_index);
    const auto tl = build_tl_generators(QParameter(o.r), o.qubits);
    report = verify_braid_relations(rho_representation(a, tl), o.tol);
    out.result["A"] = complex_json(a.value());
    out.result["derived_phi"] = a.derived_phi();
  } else {
    const auto fr = fibonacci_FR();
    report = verify_braid_relations(fr_representation(), o.tol);
    const double involution =
        frobenius_distance(matmul(fr.F, fr.F), ComplexMatrix::identity(5));
    const double r_unit = unitarity_deviation(fr.R);
    const double b_unit = unitarity_deviation(fr.B);
    report.relations.push_back({"F_involution", involution, o.tol, 1, involution <= o.tol});
    report.relations.push_back({"R_unitary", r_unit, o.tol, 1, r_unit <= o.tol});
    report.relations.push_back({"B_unitary", b_unit, o.tol, 1, b_unit <= o.tol});
  }
  out.result["report"] = relation_json(report);
  out.exit_code = report.all_pass() ? kExitOk : kExitDomain;
  return out;
}

Outcome cmd_heights(const Options& o) {
  const TilingWord word(o.word);
  const auto field = height_field(word);
  const auto state = zero_energy_state(field);
  Json result;
  result["word"] = word.letters();
  result["fibonacci_patch"] = is_fibonacci_patch(word);
  result["heights"] = field.heights;
  result["trailing_letter_ignored"] = field.trailing_letter_ignored;
  result["kappa"] = state.kappa;
  result["amplitudes"] = state.amplitudes;
  return {std::move(result)};
}

Outcome cmd_flip(const Options& o) {
  const TilingWord word(o.word);
  const auto flipped = phason_flip(word, o.pair);
  Json result;
  result["word"] = word.letters();
  result["flipped"] = flipped.letters();
  result["flipped_fibonacci_patch"] = is_fibonacci_patch(flipped);
  result["ratios"] = flip_state_ratios(word, o.pair);
  result["factor"] = flip_amplitude_factor(word, o.pair);
  return {std::move(result)};
}

Outcome cmd_compile(const Options& o) {
  const auto rep = select_representation(o);
  std::string name = o.target;
  std::optional<ComplexMatrix> target;
  if (!o.target_file.empty()) {
    target = parse_matrix(read_json_file(o.target_file));
    name = o.target_file;
  } else {
    target = named_target(o.target, rep);
  }
  const auto found = approximate_gate(*target, rep, o.max_length, name);
  Json result;
  result["target_name"] = found.target_name;
  result["generator_set_id"] = found.generator_set_id;
  result["max_length"] = found.max_length;
  result["word"] = word_json(found.word);
  result["distance"] = found.distance;
  result["words_examined"] = found.words_examined;
  return {std::move(result)};
}

Outcome cmd_simulate(const Options& o) {
  const auto rep = select_representation(o);
  const auto circuit = read_json_file(o.circuit_file);
  if (!circuit.is_array()) throw Error(ErrorCode::parse_error, "circuit must be a list of words");
  std::vector<BraidWord> words;
  for (const auto& w : circuit) words.push_back(parse_word(w, static_cast<int>(rep.size()) + 1));

  const auto initial = StateVector::basis(rep.dim(), o.initial);
  const auto final_state = simulate_circuit(words, rep, initial);
  Json result;
  result["generator_set_id"] = rep.id;
  result["words"] = words.size();
  result["initial_index"] = o.initial;
  result["final_state"] = state_json(final_state);
  result["norm"] = final_state.norm();
  if (o.rep == "rho") result["tiling_labels"] = embed_qubits(o.qubits).basis_map;
  return {std::move(result)};
}

Json resolved_config(const std::string& cmd, const Options& o) {
  Json c;
  c["format"] = o.format;
  if (cmd == "generate") {
    c["radius"] = o.radius;
    c["shift"] = o.shift;
    c["scale"] = o.scale;
  } else if (cmd == "tilings") {
    c["seed"] = o.seed;
    c["n"] = o.depth;
  } else if (cmd == "bratteli") {
    c["levels"] = o.levels;
  } else if (cmd == "verify") {
    c["what"] = o.what;
    c["qubits"] = o.qubits;
    c["root_index"] = o.root_index;
    c["r"] = o.r;
    c["tol"] = o.tol;
  } else if (cmd == "heights") {
    c["word"] = o.word;
  } else if (cmd == "flip") {
    c["word"] = o.word;
    c["pair"] = o.pair;
  } else if (cmd == "compile" || cmd == "simulate") {
    c["rep"] = o.rep;
    c["qubits"] = o.qubits;
    c["root_index"] = o.root_index;
    c["r"] = o.r;
    if (cmd == "compile") {
      c["target"] = o.target;
      c["target_file"] = o.target_file;
      c["max_length"] = o.max_length;
    } else {
      c["circuit_file"] = o.circuit_file;
      c["initial"] = o.initial;
    }
  }
  return c;
}

void print_text(std::ostream& out, const Json& envelope) {
  out << "schema: " << envelope["schema"].get<std::string>() << "\n";
  out << "version: " << envelope["version"].get<std::string>() << "\n";
  out << "command: " << envelope["command"].get<std::string>() << "\n";
  for (const auto& [k, v] : envelope["config"].items()) out << "config." << k << ": " << v.dump() << "\n";
  const char* section = envelope.contains("error") ? "error" : "result";
  for (const auto& [k, v] : envelope[section].items()) {
    out << section << "." << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fibonacci quasicrystal tilings, Jones-Wenzl projections and braid compiling",
               "quasibraid"};
  app.require_subcommand(1, 1);

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "dot"}));
  };
  const auto add_rep = [&](CLI::App* sub) {
    sub->add_option("--rep", o.rep, "Representation: rho (projections) or fr (F/R matrices)")
        ->check(CLI::IsMember({"rho", "fr"}));
    sub->add_option("--qubits", o.qubits, "Qubit count for rho")->check(CLI::Range(2, 12));
    sub->add_option("--root-index", o.root_index, "Canonical A index")->check(CLI::Range(0, 3));
    sub->add_option("--r", o.r, "q = exp(i pi / r)")->check(CLI::Range(3, 1000));
  };

  auto* gen = app.add_subcommand("generate", "Cut-and-project Fibonacci chain");
  gen->add_option("--radius", o.radius, "Lattice search radius")->check(CLI::PositiveNumber);
  gen->add_option("--shift", o.shift, "Perpendicular shift of the window");
  gen->add_option("--scale", o.scale, "Window scale")->check(CLI::PositiveNumber);
  add_format(gen);

  auto* til = app.add_subcommand("tilings", "Distinct tilings from n rule A/B inflations");
  til->add_option("--seed", o.seed, "Seed tile")->check(CLI::IsMember({"L", "S"}));
  til->add_option("--n", o.depth, "Number of inflations")->check(CLI::Range(0u, kMaxTilingDepth));
  add_format(til);

  auto* bra = app.add_subcommand("bratteli", "Bratteli diagram and AF dimension ladder");
  bra->add_option("--levels", o.levels, "Number of levels")->check(CLI::Range(1u, 100000u));
  add_format(bra);

  auto* ver = app.add_subcommand("verify", "Check algebraic relations numerically");
  ver->add_option("--what", o.what, "tl, braid or fr")->check(CLI::IsMember({"tl", "braid", "fr"}));
  ver->add_option("--qubits", o.qubits, "Qubit count")->check(CLI::Range(2, 12));
  ver->add_option("--root-index", o.root_index, "Canonical A index")->check(CLI::Range(0, 3));
  ver->add_option("--r", o.r, "q = exp(i pi / r)")->check(CLI::Range(3, 1000));
  ver->add_option("--tol", o.tol, "Frobenius tolerance")->check(CLI::NonNegativeNumber);
  add_format(ver);

  auto* hei = app.add_subcommand("heights", "Height field and zero-energy state");
  hei->add_option("--word", o.word, "Tiling word over {L,S}")->required();
  add_format(hei);

  auto* fli = app.add_subcommand("flip", "Phason flip of an aligned LS/SL pair");
  fli->add_option("--word", o.word, "Tiling word over {L,S}")->required();
  fli->add_option("--pair", o.pair, "Pair index (letters 2j, 2j+1)")->required();
  add_format(fli);

  auto* com = app.add_subcommand("compile", "Exhaustive braid-word search for a target gate");
  add_rep(com);
  auto* tgt = com->add_option("--target", o.target,
                              "identity, gen<k>, inv<k>; with --rep fr also R, B, F");
  auto* tfile = com->add_option("--target-file", o.target_file,
                                "JSON matrix {\"dim\": d, \"entries\": [[re, im], ...]}");
  tgt->excludes(tfile);
  com->add_option("--max-length", o.max_length, "Longest word searched")->check(CLI::Range(0, 64));
  add_format(com);

  auto* sim = app.add_subcommand("simulate", "Apply a braid-word circuit to a basis state");
  add_rep(sim);
  sim->add_option("--circuit-file", o.circuit_file, "JSON list of words of [n, exp]")->required();
  sim->add_option("--initial", o.initial, "Initial basis index");
  add_format(sim);

  std::vector<std::string> argv_store{"quasibraid"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  if (o.format == "dot" && cmd != "bratteli") {
    err << "dot unsupported for this command\n";
    return kExitUsage;
  }
  if (cmd == "compile" && o.target.empty() && o.target_file.empty()) {
    err << "compile needs --target or --target-file\n";
    return kExitUsage;
  }

  Json envelope;
  envelope["schema"] = kSchema;
  envelope["version"] = QUASIBRAID_VERSION;
  envelope["command"] = cmd;
  envelope["config"] = resolved_config(cmd, o);

  Outcome outcome;
  try {
    if (cmd == "generate") outcome = cmd_generate(o);
    else if (cmd == "tilings") outcome = cmd_tilings(o);
    else if (cmd == "bratteli") outcome = cmd_bratteli(o);
    else if (cmd == "verify") outcome = cmd_verify(o);
    else if (cmd == "heights") outcome = cmd_heights(o);
    else if (cmd == "flip") outcome = cmd_flip(o);
    else if (cmd == "compile") outcome = cmd_compile(o);
    else outcome = cmd_simulate(o);
  } catch (const Error& e) {
    envelope["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    outcome.exit_code = kExitDomain;
  }

  if (!envelope.contains("error") && !outcome.dot.empty()) {
    out << "// " << kSchema << " " << QUASIBRAID_VERSION << " bratteli levels=" << o.levels
        << "\n"
        << outcome.dot;
    return outcome.exit_code;
  }
  if (!envelope.contains("error")) envelope["result"] = std::move(outcome.result);
  if (o.format == "text") {
    print_text(out, envelope);
  } else {
    out << envelope.dump(2) << "\n";
  }
  return outcome.exit_code;
}

}  // namespace quasibraid::cli
