#include "cli.hpp"

#include "ratcat/errors.hpp"
#include "ratcat/exactmath.hpp"
#include "ratcat/necklaces.hpp"
#include "ratcat/paths.hpp"
#include "ratcat/render.hpp"
#include "ratcat/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <system_error>

namespace ratcat::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultLimit = 10'000'000;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ShapeArgs {
  std::size_t m = 0;
  std::size_t n = 0;
  GridShape shape() const { return GridShape(m, n); }
};

void add_shape(CLI::App* cmd, ShapeArgs& args) {
  cmd->add_option("m", args.m, "rows (number of U steps)")->required()->check(CLI::PositiveNumber);
  cmd->add_option("n", args.n, "columns (number of R steps)")->required()->check(CLI::PositiveNumber);
}

void guard(const GridShape& shape, std::uint64_t limit) {
  const BigInt words = binomial(shape.length(), shape.n());
  if (words > limit) {
    std::ostringstream os;
    os << "shape " << shape << " has " << words << " words, above --limit " << limit
       << "; raise --limit to enumerate it";
    throw SizeError(os.str());
  }
}

std::uint64_t count_of(auto stream) {
  std::uint64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

std::string str(std::size_t v) { return std::to_string(v); }

// Temp file in the target directory, then rename over the destination.
void write_atomically(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + tmp.string() + " for writing");
    file << content;
    file.flush();
    if (!file) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

// --- subcommands -----------------------------------------------------------

void cmd_count(const GridShape& shape, std::uint64_t limit, bool formula_only,
               const std::string& format, std::ostream& out) {
  Json row;
  row["m"] = str(shape.m());
  row["n"] = str(shape.n());
  row["c_gen"] = c_gen(shape).str();
  row["gcd"] = str(shape.gcd());
  row["block_length"] = str(shape.block_length());
  if (!formula_only) {
    guard(shape, limit);
    row["words"] = binomial(shape.length(), shape.n()).str();
    row["dyck_count"] = str(count_of(enumerate_dyck(shape)));
    row["necklace_count"] = str(count_of(enumerate_necklaces(shape)));
    row["marked_count"] = str(count_of(enumerate_marked(shape)));
  }
  if (format == "json") {
    out << row.dump() << '\n';
  } else {
    for (const auto& [key, value] : row.items()) out << key << ": " << value.get<std::string>() << '\n';
  }
}

void cmd_qcat(const GridShape& shape, const std::string& format, std::ostream& out) {
  const IntPolynomial poly = q_catalan_normalized(shape);
  const BigInt at_one = poly_eval_at_one(poly);
  if (format == "json") {
    Json row;
    row["m"] = str(shape.m());
    row["n"] = str(shape.n());
    Json coeffs = Json::array();
    for (const auto& c : poly.coefficients()) coeffs.push_back(c.str());
    row["coefficients"] = coeffs;
    row["value_at_1"] = at_one.str();
    out << row.dump() << '\n';
  } else {
    out << "coefficients: " << poly.str() << '\n' << "value_at_1: " << at_one << '\n';
  }
}

void cmd_paths(const GridShape& shape, std::uint64_t limit, const std::string& format,
               std::ostream& out) {
  guard(shape, limit);
  for (const DyckPath& path : enumerate_dyck(shape)) {
    const BigRational weight = anchored_weight(path);
    if (format == "text") {
      out << path.word() << " a=" << path.anchor_count() << " w_p=" << weight << '\n';
      continue;
    }
    Json row;
    row["word"] = path.word().str();
    Json anchors = Json::array();
    for (const Vertex& v : path.anchors()) anchors.push_back({{"x", str(v.x)}, {"y", str(v.y)}});
    row["anchors"] = anchors;
    row["a"] = str(path.anchor_count());
    row["w_p"] = weight.str();
    out << row.dump() << '\n';
  }
}

Json necklace_row(const Necklace& neck) {
  Json row;
  row["canonical"] = neck.canonical().str();
  row["period"] = str(neck.period());
  row["r"] = str(neck.symmetry_order());
  row["w_n"] = necklace_weight(neck).str();
  Json bl = Json::array();
  for (const auto& b : blocks(neck).blocks) bl.push_back(b.str());
  row["blocks"] = bl;
  Json reps = Json::array();
  for (std::size_t j : distinguishable_blocks(neck)) reps.push_back(str(j));
  row["distinguishable"] = reps;
  row["orbit_size"] = str(orbit_size(neck));
  return row;
}

void cmd_necklaces(const GridShape& shape, std::uint64_t limit, bool marked,
                   NecklaceAlgorithm algorithm, const std::string& format, std::ostream& out) {
  guard(shape, limit);
  if (marked) {
    for (const MarkedNecklace& mk : enumerate_marked(shape, algorithm)) {
      if (format == "text") {
        out << mk.necklace.canonical() << " mark=" << mk.mark << '\n';
        continue;
      }
      Json row = necklace_row(mk.necklace);
      row["mark"] = str(mk.mark);
      out << row.dump() << '\n';
    }
    return;
  }
  for (const Necklace& neck : enumerate_necklaces(shape, algorithm)) {
    if (format == "text") {
      out << neck.canonical() << " period=" << neck.period() << " r=" << neck.symmetry_order()
          << " w_n=" << necklace_weight(neck) << '\n';
      continue;
    }
    out << necklace_row(neck).dump() << '\n';
  }
}

void print_reports(const std::vector<TheoremReport>& reports, const std::string& format,
                   bool timings, std::ostream& out) {
  for (const auto& r : reports) {
    if (format == "text") {
      out << (r.pass ? "PASS " : "FAIL ") << to_string(r.check) << ' ' << r.shape
          << " expected=" << r.expected << " observed=" << r.observed
          << " count=" << r.enumerated_count;
      if (r.counterexample) out << " counterexample=\"" << *r.counterexample << '"';
      out << '\n';
    } else {
      out << to_json(r, timings) << '\n';
    }
  }
}

void print_summary(std::size_t max_sum, const std::vector<TheoremReport>& reports, bool complete,
                   const std::string& format, std::ostream& out) {
  const auto failed = static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; }));
  const bool pass = complete && failed == 0;
  if (format == "text") {
    out << (pass ? "ALL PASS" : "FAILED") << ": " << reports.size() << " reports, " << failed
        << " failed, max_sum " << max_sum << (complete ? "" : ", run incomplete") << '\n';
    return;
  }
  Json summary;
  summary["max_sum"] = str(max_sum);
  summary["reports"] = str(reports.size());
  summary["failed"] = str(failed);
  summary["complete"] = complete;
  summary["pass"] = pass;
  out << Json{{"summary", summary}}.dump() << '\n';
}

int cmd_verify(const RunOptions& options, const std::string& format, bool timings,
               std::ostream& out, std::ostream& err) {
  try {
    const VerificationRun run = run_all(options);
    print_reports(run.reports, format, timings, out);
    print_summary(options.max_sum, run.reports, true, format, out);
    return run.pass() ? kOk : kChecksFailed;
  } catch (const PartialRunError& e) {
    print_reports(e.completed().reports, format, timings, out);
    print_summary(options.max_sum, e.completed().reports, false, format, out);
    err << "error: " << e.what() << '\n';
    return kChecksFailed;
  }
}

void cmd_table(std::size_t max_sum, const std::string& format, std::ostream& out) {
  if (max_sum < 2) throw DomainError("table needs --max-sum >= 2");
  if (format == "csv") out << "m,n,c_gen\n";
  for (const GridShape& shape : shapes_up_to(max_sum)) {
    const std::string value = c_gen(shape).str();
    if (format == "csv") {
      out << shape.m() << ',' << shape.n() << ',' << value << '\n';
    } else if (format == "json") {
      out << Json{{"m", str(shape.m())}, {"n", str(shape.n())}, {"c_gen", value}}.dump() << '\n';
    } else {
      out << shape << ' ' << value << '\n';
    }
  }
}

NecklaceAlgorithm parse_algorithm(const std::string& name) {
  return name == "fkm" ? NecklaceAlgorithm::kFixedContent : NecklaceAlgorithm::kFilterCanonical;
}

void emit(const std::string& svg, const std::string& output, std::ostream& out) {
  if (output.empty() || output == "-") {
    out << svg;
  } else {
    write_atomically(output, svg);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational Dyck paths, binary necklaces and the generalized Catalan number"};
  app.name(args.empty() ? "ratcat" : args.front());
  app.require_subcommand(1);

  std::uint64_t limit = kDefaultLimit;
  std::string format;
  std::string algorithm = "filter";
  const auto add_limit = [&](CLI::App* cmd) {
    cmd->add_option("--limit", limit, "largest binom(m+n,n) to enumerate")
        ->capture_default_str();
  };

  ShapeArgs shape_args;

  auto* count = app.add_subcommand("count", "c_gen and the enumerated counts for one shape");
  add_shape(count, shape_args);
  add_limit(count);
  bool formula_only = false;
  count->add_flag("--formula-only", formula_only, "skip enumeration, report c_gen only");
  count->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* qcat = app.add_subcommand("qcat", "coefficients of the normalized q-Catalan polynomial");
  add_shape(qcat, shape_args);
  qcat->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* paths = app.add_subcommand("paths", "list Dyck paths with anchors and weights (JSONL)");
  add_shape(paths, shape_args);
  add_limit(paths);
  paths->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* necks = app.add_subcommand("necklaces", "list necklaces with weights and blocks (JSONL)");
  add_shape(necks, shape_args);
  add_limit(necks);
  bool marked = false;
  necks->add_flag("--marked", marked, "one row per marked necklace");
  necks->add_option("--algorithm", algorithm, "necklace generator")
      ->check(CLI::IsMember({"filter", "fkm"}));
  necks->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "exhaustively check the identities over all shapes");
  RunOptions run_options;
  std::string checks = "all";
  bool timings = false;
  std::optional<std::int64_t> budget_ms;
  verify->add_option("--max-sum", run_options.max_sum, "largest m+n")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  verify->add_option("--checks", checks, "comma list of 1,2,3,lemma,orbit,qcat or all")
      ->capture_default_str();
  verify->add_option("--threads", run_options.threads, "worker threads (0 = all cores)");
  verify->add_option("--time-budget-ms", budget_ms, "stop after this many milliseconds");
  verify->add_flag("--timings", timings, "add elapsed_ms to every report");
  verify->add_option("--algorithm", algorithm, "necklace generator")
      ->check(CLI::IsMember({"filter", "fkm"}));
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* render = app.add_subcommand("render", "write SVG diagrams");
  render->require_subcommand(1);
  std::string output;
  std::string word_text;
  std::optional<std::size_t> path_m;
  std::optional<std::size_t> path_n;
  std::optional<std::size_t> mark;
  std::size_t max_necklaces = GalleryOptions{}.max_necklaces;

  auto* render_path_cmd = render->add_subcommand("path", "one Dyck path");
  render_path_cmd->add_option("word", word_text, "path word (UR, () or bead glyphs)")->required();
  render_path_cmd->add_option("m", path_m, "rows; defaults to the number of U's");
  render_path_cmd->add_option("n", path_n, "columns; defaults to the number of R's");
  render_path_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* render_neck_cmd = render->add_subcommand("necklace", "one necklace, optionally marked");
  render_neck_cmd->add_option("word", word_text, "any word of the necklace")->required();
  render_neck_cmd->add_option("--mark", mark, "distinguishable block to outline");
  render_neck_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* render_gallery_cmd = render->add_subcommand("gallery", "every necklace, mark and path of a shape");
  add_shape(render_gallery_cmd, shape_args);
  render_gallery_cmd->add_option("--max-necklaces", max_necklaces, "layout cap")
      ->capture_default_str();
  render_gallery_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* table = app.add_subcommand("table", "c_gen for every shape with m+n <= max-sum");
  std::size_t table_max = 10;
  table->add_option("--max-sum", table_max, "largest m+n")->capture_default_str();
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  const auto format_or = [&](const char* fallback) { return format.empty() ? std::string(fallback) : format; };

  try {
    if (*count) {
      cmd_count(shape_args.shape(), limit, formula_only, format_or("text"), out);
    } else if (*qcat) {
      cmd_qcat(shape_args.shape(), format_or("text"), out);
    } else if (*paths) {
      cmd_paths(shape_args.shape(), limit, format_or("json"), out);
    } else if (*necks) {
      cmd_necklaces(shape_args.shape(), limit, marked, parse_algorithm(algorithm),
                    format_or("json"), out);
    } else if (*verify) {
      run_options.checks = parse_checks(checks);
      run_options.algorithm = parse_algorithm(algorithm);
      if (budget_ms) run_options.time_budget = std::chrono::milliseconds(*budget_ms);
      return cmd_verify(run_options, format_or("json"), timings, out, err);
    } else if (*render_path_cmd) {
      const BinaryWord word = BinaryWord::parse(word_text);
      const std::size_t us = word.count(Letter::U);
      const GridShape shape(path_m.value_or(us), path_n.value_or(word.size() - us));
      emit(render_path(DyckPath(word, shape)), output, out);
    } else if (*render_neck_cmd) {
      emit(render_necklace(Necklace::of(BinaryWord::parse(word_text)), mark), output, out);
    } else if (*render_gallery_cmd) {
      GalleryOptions opts;
      opts.max_necklaces = max_necklaces;
      emit(render_gallery(shape_args.shape(), opts), output, out);
    } else if (*table) {
      cmd_table(table_max, format_or("csv"), out);
    }
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace ratcat::cli
