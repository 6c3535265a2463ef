#include "cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "kreweras/bijection.hpp"
#include "kreweras/error.hpp"
#include "kreweras/sampler.hpp"

namespace kreweras::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  OutputFormat format;
  std::size_t cap;
};

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "bfile") return OutputFormat::Bfile;
  return OutputFormat::Text;
}

std::size_t resolve_cap(const std::optional<std::size_t>& flag) {
  if (flag) {
    return *flag;
  }
  if (const char* env = std::getenv(kCapEnvVar); env != nullptr && *env != '\0') {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(env, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || env[pos] != '\0') {
      throw UsageError(std::string(kCapEnvVar) + " is not a nonnegative integer: " + env);
    }
    return static_cast<std::size_t>(value);
  }
  return kDefaultEnumerationCap;
}

void require_not_bfile(const Context& ctx, const char* command) {
  if (ctx.format == OutputFormat::Bfile) {
    throw UsageError(std::string("bfile output is only available for single-sequence "
                                 "outputs (sequence), not ") + command);
  }
}

std::vector<std::int64_t> parse_multiplicities(std::string text) {
  if (!text.empty() && text.front() == '[') text.erase(0, 1);
  if (!text.empty() && text.back() == ']') text.pop_back();
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size()) {
      throw UsageError("invalid multiplicity '" + item + "'");
    }
    out.push_back(value);
  }
  return out;
}

// One path per line in text/csv, an array in JSON.
void emit_paths(const Context& ctx, PathStream stream, bool with_index = false) {
  if (ctx.format == OutputFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const DyckPath& p : stream) arr.push_back(render_path(p));
    ctx.out << arr.dump() << '\n';
    return;
  }
  if (ctx.format == OutputFormat::Csv) {
    ctx.out << (with_index ? "index,path\n" : "path\n");
    std::size_t i = 0;
    for (const DyckPath& p : stream) {
      if (with_index) ctx.out << i++ << ',';
      ctx.out << render_path(p) << '\n';
    }
    return;
  }
  for (const DyckPath& p : stream) ctx.out << path_text(p) << '\n';
}

int cmd_stats(const Context& ctx, const std::vector<std::string>& inputs) {
  require_not_bfile(ctx, "stats");
  bool header_done = false;
  auto emit = [&](const DyckPath& path) {
    const PathStats st = stats(path);
    switch (ctx.format) {
      case OutputFormat::Json:
        ctx.out << to_json(st, path).dump() << '\n';
        break;
      case OutputFormat::Csv:
        if (!header_done) {
          ctx.out << "path,semilength,r,s,apexes,plateaus\n";
          header_done = true;
        }
        ctx.out << render_path(path) << ',' << path.semilength() << ','
                << st.peak_count << ',' << st.plateau_count << ','
                << join_apexes(st, ';') << ',' << join_plateaus(st, ';') << '\n';
        break;
      default:
        ctx.out << path_text(path) << " r=" << st.peak_count
                << " s=" << st.plateau_count << " apexes=" << join_apexes(st, ',')
                << " plateaus=" << join_plateaus(st, ',') << '\n';
    }
  };

  for (const std::string& input : inputs) {
    if (input != "-") {
      emit(parse_path_token(input));
      continue;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(ctx.in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      try {
        emit(parse_path_token(line));
      } catch (const Error& e) {
        ctx.err << "error: line " << line_no << ": " << e.what() << '\n';
        return kExitUsage;
      }
    }
  }
  return kExitOk;
}

int cmd_reduce(const Context& ctx, const std::string& text) {
  require_not_bfile(ctx, "reduce");
  const DyckPath input = parse_path_token(text);
  const ReduceResult result = reduce(input);
  switch (ctx.format) {
    case OutputFormat::Json:
      ctx.out << to_json(result, input).dump() << '\n';
      break;
    case OutputFormat::Csv: {
      std::string m = join_multiplicities(result.plan);
      std::replace(m.begin(), m.end(), ',', ';');
      ctx.out << "input,base,r,s,multiplicities\n"
              << render_path(input) << ',' << render_path(result.base) << ','
              << result.original_stats.peak_count << ','
              << result.original_stats.plateau_count << ','
              << m.substr(1, m.size() - 2) << '\n';
      break;
    }
    default:
      ctx.out << "base=" << path_text(result.base)
              << " m=" << join_multiplicities(result.plan)
              << " r=" << result.original_stats.peak_count
              << " s=" << result.original_stats.plateau_count << '\n';
  }
  return kExitOk;
}

int cmd_plan(const Context& ctx, const std::string& text) {
  require_not_bfile(ctx, "plan");
  const InsertionPlan plan = plan_of(parse_path_token(text));
  switch (ctx.format) {
    case OutputFormat::Json:
      ctx.out << to_json(plan).dump() << '\n';
      break;
    case OutputFormat::Csv: {
      std::string m = join_multiplicities(plan);
      std::replace(m.begin(), m.end(), ',', ';');
      ctx.out << "base,multiplicities\n"
              << render_path(plan.base) << ',' << m.substr(1, m.size() - 2) << '\n';
      break;
    }
    default:
      ctx.out << "base=" << path_text(plan.base)
              << " m=" << join_multiplicities(plan) << '\n';
  }
  return kExitOk;
}

int cmd_expand(const Context& ctx, const std::string& base_text,
               const std::string& multiplicities) {
  require_not_bfile(ctx, "expand");
  const InsertionPlan plan{parse_path_token(base_text),
                           parse_multiplicities(multiplicities)};
  const DyckPath path = expand(plan);
  switch (ctx.format) {
    case OutputFormat::Json:
      ctx.out << nlohmann::json{{"path", render_path(path)}, {"plan", to_json(plan)}}.dump()
              << '\n';
      break;
    case OutputFormat::Csv:
      ctx.out << "path\n" << render_path(path) << '\n';
      break;
    default:
      ctx.out << path_text(path) << '\n';
  }
  return kExitOk;
}

int cmd_fiber(const Context& ctx, const std::string& base_text, std::size_t r) {
  require_not_bfile(ctx, "fiber");
  emit_paths(ctx, fiber(parse_path_token(base_text), r), true);
  return kExitOk;
}

int cmd_enumerate(const Context& ctx, std::size_t semilength,
                  const std::optional<std::size_t>& peaks) {
  require_not_bfile(ctx, "enumerate");
  if (peaks) {
    emit_paths(ctx, enumerate_paths_with_peaks(semilength, *peaks, ctx.cap));
  } else {
    emit_paths(ctx, enumerate_paths(semilength, ctx.cap));
  }
  return kExitOk;
}

int cmd_table(const Context& ctx, std::size_t semilength, bool predicted) {
  require_not_bfile(ctx, "table");
  const JointDistribution table = joint_distribution(semilength, ctx.cap);
  auto prediction = [&](std::size_t r, std::size_t s) -> std::optional<BigCount> {
    if (!predicted || r == 0 || r >= semilength) return std::nullopt;
    return refined_count(semilength - r, r, static_cast<std::int64_t>(s));
  };
  if (ctx.format == OutputFormat::Json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, count] : table) {
      nlohmann::json row = {{"m", semilength}, {"r", key.first}, {"s", key.second},
                            {"count", count.str()}};
      if (predicted) {
        const auto p = prediction(key.first, key.second);
        row["predicted"] = p ? nlohmann::json(p->str()) : nlohmann::json(nullptr);
      }
      rows.push_back(std::move(row));
    }
    ctx.out << rows.dump() << '\n';
    return kExitOk;
  }
  ctx.out << "m,r,s,count" << (predicted ? ",predicted" : "") << '\n';
  for (const auto& [key, count] : table) {
    ctx.out << semilength << ',' << key.first << ',' << key.second << ',' << count;
    if (predicted) {
      const auto p = prediction(key.first, key.second);
      ctx.out << ',' << (p ? p->str() : "");
    }
    ctx.out << '\n';
  }
  return kExitOk;
}

void print_summary(const Context& ctx, const char* name,
                   const VerificationSummary& summary) {
  if (ctx.format == OutputFormat::Json) {
    ctx.out << to_json(summary).dump() << '\n';
    return;
  }
  ctx.out << name << ": checked " << summary.checked_cases << " cases, "
          << summary.failures.size() << " failures (" << std::fixed
          << std::setprecision(1) << summary.elapsed_ms << " ms)\n";
  for (const auto& f : summary.failures) {
    ctx.out << "FAIL " << f.parameters.dump() << " expected=" << f.expected
            << " actual=" << f.actual;
    if (!f.detail.empty()) ctx.out << " detail=" << f.detail.dump();
    ctx.out << '\n';
  }
}

int cmd_verify_identity(const Context& ctx, std::uint64_t n_max,
                        std::uint64_t r_max, const IdentityEvaluator& evaluator) {
  if (ctx.format == OutputFormat::Csv || ctx.format == OutputFormat::Bfile) {
    throw UsageError("verify-identity supports text and json output");
  }
  if (n_max < 1 || r_max < 1) {
    throw UsageError("--n-max and --r-max must be >= 1");
  }
  const VerificationSummary summary = verify_identity(n_max, r_max, evaluator);
  print_summary(ctx, "verify-identity", summary);
  return summary.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_verify_bijection(const Context& ctx, std::size_t semilength_max) {
  if (ctx.format == OutputFormat::Csv || ctx.format == OutputFormat::Bfile) {
    throw UsageError("verify-bijection supports text and json output");
  }
  if (semilength_max > ctx.cap) {
    throw Error(ErrorCode::CapExceeded,
                "semilength " + std::to_string(semilength_max) +
                    " exceeds enumeration cap " + std::to_string(ctx.cap));
  }
  const VerificationSummary summary = verify_bijection(semilength_max, ctx.cap);
  print_summary(ctx, "verify-bijection", summary);
  return summary.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_sample(const Context& ctx, std::uint64_t n, std::uint64_t r,
               std::uint64_t count, std::uint64_t seed, bool histogram) {
  require_not_bfile(ctx, "sample");
  const std::vector<DyckPath> samples = sample_uniform(n, r, seed, count);
  if (histogram) {
    std::map<DyckPath, std::uint64_t> hist;
    for (const DyckPath& p : samples) ++hist[p];
    if (ctx.format == OutputFormat::Json) {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [p, c] : hist) rows.push_back({{"path", render_path(p)}, {"count", c}});
      ctx.out << nlohmann::json{{"n", n}, {"r", r}, {"seed", seed}, {"count", count},
                                {"histogram", std::move(rows)}}.dump()
              << '\n';
    } else {
      if (ctx.format == OutputFormat::Csv) ctx.out << "path,count\n";
      const char sep = ctx.format == OutputFormat::Csv ? ',' : ' ';
      for (const auto& [p, c] : hist) {
        ctx.out << (ctx.format == OutputFormat::Csv ? render_path(p) : path_text(p))
                << sep << c << '\n';
      }
    }
    return kExitOk;
  }
  if (ctx.format == OutputFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const DyckPath& p : samples) arr.push_back(render_path(p));
    ctx.out << nlohmann::json{{"n", n}, {"r", r}, {"seed", seed}, {"count", count},
                              {"samples", std::move(arr)}}.dump()
            << '\n';
    return kExitOk;
  }
  if (ctx.format == OutputFormat::Csv) ctx.out << "path\n";
  for (const DyckPath& p : samples) ctx.out << path_text(p) << '\n';
  return kExitOk;
}

int cmd_sequence(const Context& ctx, const std::string& kind, std::uint64_t n_max) {
  if (kind == "catalan") {
    switch (ctx.format) {
      case OutputFormat::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (std::uint64_t n = 0; n <= n_max; ++n) arr.push_back(catalan(n).str());
        ctx.out << arr.dump() << '\n';
        break;
      }
      case OutputFormat::Csv:
        ctx.out << "n,value\n";
        for (std::uint64_t n = 0; n <= n_max; ++n) ctx.out << n << ',' << catalan(n) << '\n';
        break;
      case OutputFormat::Bfile:
        for (std::uint64_t n = 0; n <= n_max; ++n) ctx.out << n << ' ' << catalan(n) << '\n';
        break;
      default:
        for (std::uint64_t n = 0; n <= n_max; ++n) ctx.out << catalan(n) << '\n';
    }
    return kExitOk;
  }
  // narayana-triangle: rows n = 1..n_max, entries k = 1..n.
  switch (ctx.format) {
    case OutputFormat::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        nlohmann::json row = nlohmann::json::array();
        for (std::uint64_t k = 1; k <= n; ++k) row.push_back(narayana(n, k).str());
        rows.push_back(std::move(row));
      }
      ctx.out << rows.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      ctx.out << "n,k,value\n";
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) {
          ctx.out << n << ',' << k << ',' << narayana(n, k) << '\n';
        }
      }
      break;
    case OutputFormat::Bfile: {
      std::uint64_t index = 1;
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) {
          ctx.out << index++ << ' ' << narayana(n, k) << '\n';
        }
      }
      break;
    }
    default:
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) {
          ctx.out << (k > 1 ? " " : "") << narayana(n, k);
        }
        ctx.out << '\n';
      }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, const Environment& env) {
  std::istream& in = *env.in;
  std::ostream& out = *env.out;
  std::ostream& err = *env.err;

  CLI::App app{"Dyck paths, peak plateaus and Kreweras's Narayana identity"};
  app.name("kreweras");
  app.require_subcommand(1);

  std::string format_name = "text";
  std::optional<std::size_t> cap_flag;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "bfile"}));
  app.add_option("--cap", cap_flag,
                 "Enumeration cap on semilength (default 16, or $" +
                     std::string(kCapEnvVar) + ")");

  auto* stats_cmd = app.add_subcommand("stats", "Peaks and peak plateaus of paths");
  std::vector<std::string> stats_inputs;
  bool unordered = false;
  stats_cmd->add_option("paths", stats_inputs, "Paths, or - to read lines from stdin")
      ->required();
  stats_cmd->add_flag("--unordered", unordered,
                      "Allow reordering of stdin results (output stays ordered)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Delete all peaks of a path");
  std::string reduce_input;
  reduce_cmd->add_option("path", reduce_input)->required();

  auto* plan_cmd = app.add_subcommand("plan", "Insertion plan that rebuilds a path");
  std::string plan_input;
  plan_cmd->add_option("path", plan_input)->required();

  auto* expand_cmd = app.add_subcommand("expand", "Expand a base path and multiplicities");
  std::string expand_base;
  std::string expand_mults;
  expand_cmd->add_option("base", expand_base)->required();
  expand_cmd->add_option("multiplicities", expand_mults,
                         "Comma-separated list, optionally in brackets")
      ->required();

  auto* fiber_cmd = app.add_subcommand("fiber", "All preimages of a base path");
  std::string fiber_base;
  std::size_t fiber_r = 0;
  fiber_cmd->add_option("base", fiber_base)->required();
  fiber_cmd->add_option("r", fiber_r)->required()->check(CLI::PositiveNumber);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List Dyck paths in text order");
  std::size_t enum_m = 0;
  std::optional<std::size_t> enum_peaks;
  enumerate_cmd->add_option("semilength", enum_m)->required();
  enumerate_cmd->add_option("--peaks", enum_peaks, "Keep only paths with this many peaks");

  auto* table_cmd = app.add_subcommand("table", "Joint (peaks, plateaus) distribution");
  std::size_t table_m = 0;
  bool table_predicted = false;
  table_cmd->add_option("semilength", table_m)->required();
  table_cmd->add_flag("--predicted", table_predicted, "Add the predicted count column");

  auto* vid_cmd = app.add_subcommand("verify-identity", "Check both identity forms exactly");
  std::uint64_t n_max = 0;
  std::uint64_t r_max = 0;
  vid_cmd->add_option("--n-max", n_max)->required();
  vid_cmd->add_option("--r-max", r_max)->required();

  auto* vbij_cmd = app.add_subcommand("verify-bijection", "Exhaustively check the bijection");
  std::size_t m_max = 0;
  vbij_cmd->add_option("--semilength-max", m_max)->required();

  auto* sample_cmd = app.add_subcommand("sample", "Uniform Dyck (n+r)-paths with r peaks");
  std::uint64_t sample_n = 0;
  std::uint64_t sample_r = 0;
  std::uint64_t sample_count = 0;
  std::uint64_t sample_seed = 0;
  bool histogram = false;
  sample_cmd->add_option("n", sample_n)->required();
  sample_cmd->add_option("r", sample_r)->required();
  sample_cmd->add_option("count", sample_count)->required();
  sample_cmd->add_option("--seed", sample_seed, "Random seed (default 0)");
  sample_cmd->add_flag("--histogram", histogram, "Print per-path counts");

  auto* sequence_cmd = app.add_subcommand("sequence", "Catalan numbers or the Narayana triangle");
  std::string kind;
  std::uint64_t seq_n_max = 0;
  sequence_cmd->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"catalan", "narayana-triangle"}));
  sequence_cmd->add_option("n-max", seq_n_max)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv{"kreweras"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Context ctx{in, out, err, parse_format(format_name), resolve_cap(cap_flag)};
    if (*stats_cmd) return cmd_stats(ctx, stats_inputs);
    if (*reduce_cmd) return cmd_reduce(ctx, reduce_input);
    if (*plan_cmd) return cmd_plan(ctx, plan_input);
    if (*expand_cmd) return cmd_expand(ctx, expand_base, expand_mults);
    if (*fiber_cmd) return cmd_fiber(ctx, fiber_base, fiber_r);
    if (*enumerate_cmd) return cmd_enumerate(ctx, enum_m, enum_peaks);
    if (*table_cmd) return cmd_table(ctx, table_m, table_predicted);
    if (*vid_cmd) return cmd_verify_identity(ctx, n_max, r_max, env.evaluator);
    if (*vbij_cmd) return cmd_verify_bijection(ctx, m_max);
    if (*sample_cmd) {
      return cmd_sample(ctx, sample_n, sample_r, sample_count, sample_seed, histogram);
    }
    if (*sequence_cmd) return cmd_sequence(ctx, kind, seq_n_max);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kreweras::cli
