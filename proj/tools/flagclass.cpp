// flagclass command-line frontend: info, classify, sweep, verify.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "flagclass/error.hpp"
#include "flagclass/report.hpp"
#include "flagclass/tzs.hpp"
#include "flagclass/verify.hpp"

namespace fs = std::filesystem;
using namespace flagclass;

namespace {

enum Exit { kOk = 0, kUsage = 1, kCap = 2, kVerifyFailed = 3 };

struct RunConfig {
  std::string type;
  int rank = 0;
  std::string theta;
  std::string paint;
  int max_rank = 3;
  std::string out;
  std::uint64_t weyl_cap = kDefaultWeylCap;
  int iacs_cap = kDefaultIacsCap;
  std::string format = "json";
  bool orbits = false;
  bool serial = false;
  bool inject_fault = false;
  std::uint64_t seed = 1;
};

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorKind::InvalidArgument, "bad node index '" + item + "'");
    out.push_back(v);
  }
  return out;
}

FlagSpec flag_from(const RunConfig& c) {
  if (c.type.empty()) throw Error(ErrorKind::InvalidArgument, "--type is required");
  std::string type = c.type;
  if (c.rank > 0) type += std::to_string(c.rank);
  auto rs = std::make_shared<const RootSystem>(build_root_system(LieType::parse(type)));
  if (!c.paint.empty()) return make_flag_from_paint(rs, parse_indices(c.paint));
  return make_flag(rs, parse_indices(c.theta));
}

std::string out_path(const RunConfig& c) {
  if (const char* env = std::getenv("FLAGCLASS_OUT"); env && *env) return env;
  return c.out;
}

void write_file(const fs::path& p, const std::string& text) {
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
    os << text;
    if (!os.flush()) throw Error(ErrorKind::Io, "write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot rename " + tmp.string() + ": " + ec.message());
}

void emit(const RunConfig& c, const std::string& text) {
  std::string path = out_path(c);
  if (path.empty()) {
    std::cout << text;
    return;
  }
  write_file(path, text);
}

std::string render(const RunConfig& c, const Json& j) {
  if (c.format == "text") return render_text(j);
  return j.dump(2) + "\n";
}

int run_info(const RunConfig& c) {
  emit(c, render(c, info_report(flag_from(c))));
  return kOk;
}

int run_classify(const RunConfig& c) {
  FlagSpec f = flag_from(c);
  ClassifyOptions opt;
  opt.iacs_cap = c.iacs_cap;
  Json j = classification_report(f, opt);
  if (c.orbits) j["orbits"] = orbit_report(f, c.weyl_cap, c.iacs_cap)["orbits"];
  emit(c, render(c, j));
  return kOk;
}

Json sweep_entry(const FlagSpec& f) {
  Json e;
  e["flag"] = f.str();
  e["file"] = f.file_stem() + ".json";
  e["status"] = "pending";
  return e;
}

int run_sweep(const RunConfig& c) {
  const std::string dir = out_path(c);
  if (dir.empty()) throw Error(ErrorKind::InvalidArgument, "sweep needs --out or FLAGCLASS_OUT");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir + ": " + ec.message());

  std::vector<FlagSpec> flags;
  for (const auto& t : all_types_up_to(c.max_rank))
    for (auto& f : all_flags(std::make_shared<const RootSystem>(build_root_system(t)))) flags.push_back(std::move(f));

  Json index;
  index["schema"] = kSchema;
  index["max_rank"] = c.max_rank;
  index["iacs_cap"] = c.iacs_cap;
  index["flags"] = Json::array();
  for (const auto& f : flags) index["flags"].push_back(sweep_entry(f));
  const fs::path index_path = fs::path(dir) / "index.json";
  write_file(index_path, index.dump(2) + "\n");

  ClassifyOptions opt;
  opt.iacs_cap = c.iacs_cap;
  bool capped = false;
  std::string io_error;
  const std::int64_t n = static_cast<std::int64_t>(flags.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < n; ++i) {
    const FlagSpec& f = flags[i];
    Json verdicts;
    std::string status = "done";
    std::string text;
    try {
      Json report = classification_report(f, opt);
      verdicts = report["theorems"];
      text = report.dump(2) + "\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
      status = "cap_exceeded";
      Json tzs = info_report(f)["tzs"];
      verdicts["tzs_connected"] = tzs["connected"];
    }
#pragma omp critical(flagclass_sweep_collector)
    {
      try {
        if (!text.empty()) write_file(fs::path(dir) / (f.file_stem() + ".json"), text);
        Json& e = index["flags"][i];
        e["status"] = status;
        e["verdicts"] = verdicts;
        write_file(index_path, index.dump(2) + "\n");
      } catch (const Error& e) {
        if (io_error.empty()) io_error = e.what();
      }
      capped = capped || status == "cap_exceeded";
    }
  }
  if (!io_error.empty()) throw Error(ErrorKind::Io, io_error);

  std::size_t done = 0;
  bool verdicts_hold = true;
  for (const auto& e : index["flags"]) {
    if (e["status"] == "done") ++done;
    for (const auto& [k, v] : e["verdicts"].items()) verdicts_hold = verdicts_hold && v.get<bool>();
  }
  std::cerr << done << "/" << flags.size() << " flags classified"
            << (verdicts_hold ? ", all verdicts hold" : ", SOME VERDICTS FAIL") << "\n";
  if (!verdicts_hold) return kVerifyFailed;
  return capped ? kCap : kOk;
}

int run_verify(const RunConfig& c) {
  SuiteOptions opt;
  opt.max_rank = c.max_rank;
  opt.iacs_cap = c.iacs_cap;
  opt.weyl_cap = c.weyl_cap;
  opt.parallel = !c.serial;
  opt.inject_fault = c.inject_fault;
  opt.seed = c.seed;
  auto results = run_suite(opt);
  bool all = true;
  Json j;
  j["schema"] = kSchema;
  j["max_rank"] = c.max_rank;
  j["checks"] = Json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    all = all && r.passed;
    j["checks"].push_back(r.to_json());
    text << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.summary;
    text << " [" << std::fixed << std::setprecision(2) << r.seconds << " s]\n";
    if (!r.passed && !r.counterexample.is_null()) text << "  counterexample: " << r.counterexample.dump() << "\n";
  }
  j["passed"] = all;
  emit(c, c.format == "text" ? text.str() : j.dump(2) + "\n");
  return all ? kOk : kVerifyFailed;
}

void add_flag_options(CLI::App* app, RunConfig& c) {
  app->add_option("--type", c.type, "Lie type, e.g. A3 or A with --rank")->required();
  app->add_option("--rank", c.rank, "rank when --type names only the family")->check(CLI::PositiveNumber);
  auto* theta = app->add_option("--theta", c.theta, "white (unpainted) simple roots, e.g. 2,3; empty for the full flag")
                    ->expected(0, 1);
  app->add_option("--paint", c.paint, "painted (black) simple roots; Theta is the complement")->excludes(theta);
}

void add_caps(CLI::App* app, RunConfig& c) {
  app->add_option("--weyl-cap", c.weyl_cap, "maximum Weyl group order")->check(CLI::PositiveNumber);
  app->add_option("--iacs-cap", c.iacs_cap, "maximum number of positive t-roots")->check(CLI::Range(1, kMaxMaskBits));
}

void add_output(CLI::App* app, RunConfig& c) {
  app->add_option("--out", c.out, "output file (directory for sweep); FLAGCLASS_OUT overrides");
  app->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::CapExceeded:
      return kCap;
    case ErrorKind::InvariantViolation:
      return kVerifyFailed;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant almost Hermitian structures on generalized flag manifolds"};
  app.require_subcommand(1);
  RunConfig c;

  auto* info = app.add_subcommand("info", "t-roots, zero-sum triples and tzs connectivity of one flag");
  add_flag_options(info, c);
  add_output(info, c);

  auto* classify = app.add_subcommand("classify", "classify every invariant almost complex structure of one flag");
  add_flag_options(classify, c);
  add_caps(classify, c);
  add_output(classify, c);
  classify->add_flag("--orbits", c.orbits, "add the A_Theta orbits of the structures");

  auto* sweep = app.add_subcommand("sweep", "classify every flag up to a rank and write one report per flag");
  sweep->add_option("--max-rank", c.max_rank, "largest rank swept (default 3)")->check(CLI::Range(1, 8));
  add_caps(sweep, c);
  add_output(sweep, c);

  auto* verify = app.add_subcommand("verify", "run the theorem checks (default iacs cap 24 covers every rank 4 flag)");
  verify->add_option("--max-rank", c.max_rank, "largest rank checked (default 4)")->check(CLI::Range(1, 8));
  add_caps(verify, c);
  add_output(verify, c);
  verify->add_flag("--serial", c.serial, "use the serial kernels");
  verify->add_option("--seed", c.seed, "seed for the random root pairs");
  verify->add_flag("--inject-fault", c.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  if (*verify && verify->get_option("--iacs-cap")->count() == 0) c.iacs_cap = SuiteOptions{}.iacs_cap;
  if (*verify && verify->get_option("--max-rank")->count() == 0) c.max_rank = SuiteOptions{}.max_rank;

  try {
    if (*info) return run_info(c);
    if (*classify) return run_classify(c);
    if (*sweep) return run_sweep(c);
    return run_verify(c);
  } catch (const Error& e) {
    std::cerr << "flagclass: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "flagclass: " << e.what() << "\n";
    return kUsage;
  }
}
