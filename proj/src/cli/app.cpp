#include "enriques/cli/app.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "enriques/cli/json_io.hpp"
#include "enriques/cli/records.hpp"
#include "enriques/errors.hpp"

namespace enriques::cli {
namespace {

enum class Format { Human, JsonLines };

struct Params {
  std::optional<Integer> a;
  long n = 2;
  long k = 1;
  CertTarget target = CertTarget::GaussOnSurface;
  std::optional<int> radius;
};

struct Outcome {
  int code = kOk;
  std::string text;  // rendered record on success, message otherwise
};

Outcome guarded(const std::function<std::string()>& body) {
  try {
    return {kOk, body()};
  } catch (const InputError& e) {
    return {kUsage, e.what()};
  } catch (const PreconditionError& e) {
    return {kPrecondition, e.what()};
  } catch (const std::invalid_argument& e) {
    return {kUsage, e.what()};
  } catch (const std::out_of_range& e) {
    return {kUsage, e.what()};
  } catch (const std::exception& e) {
    return {kInternal, std::string("internal error: ") + e.what()};
  }
}

Integer parse_integer_flag(const std::string& text, std::string_view what) {
  return json_integer(Json(text), what);
}

CertTarget parse_target(std::string_view s) {
  if (s == "gauss") return CertTarget::GaussOnSurface;
  if (s == "prym") return CertTarget::GaussPrymOnCurve;
  throw InputError("target must be gauss or prym, got \"" + std::string(s) + "\"");
}

std::string execute(const std::string& command, const PicClass& h, const Params& p, Format f) {
  auto render = [f](const auto& record) { return f == Format::JsonLines ? to_json(record) + "\n" : to_human(record); };
  if (command == "phi") return render(compute_phi(h, p.radius));
  if (command == "report") return render(compute_report(h));
  if (command == "hilb") {
    if (!p.a) throw InputError("hilb needs the coefficient a");
    return render(compute_hilb(Hilb2Class{h, *p.a, p.n}));
  }
  if (command == "certify") return render(compute_certificate(h, p.k, p.target));
  throw InputError("unknown command \"" + command + "\"");
}

void emit_error(const Outcome& o, Format f, std::ostream& out, std::ostream& err) {
  if (f == Format::JsonLines) {
    out << ObjectWriter().field("error", o.text).field("exit_code", static_cast<long>(o.code)).str() << "\n";
  } else {
    err << "error: " << o.text << "\n";
  }
}

// ---- batch ----

struct BatchItem {
  std::optional<std::string> id;
  std::optional<std::string> parse_error;
  Json record;
};

std::vector<BatchItem> read_batch(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read batch file \"" + path + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::vector<BatchItem> items;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return items;
  if (text[first] == '[') {
    const Json all = parse_json(text);
    for (const auto& r : all) items.push_back({std::nullopt, std::nullopt, r});
    return items;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    BatchItem item;
    try {
      item.record = parse_json(line);
    } catch (const InputError& e) {
      item.parse_error = e.what();
    }
    items.push_back(std::move(item));
  }
  return items;
}

std::string run_record(const std::string& command, const Json& r, const Params& defaults, Format f) {
  if (!r.is_object()) throw InputError("batch record must be an object");
  static const std::set<std::string> known = {"id", "vector", "a", "n", "k", "target"};
  for (const auto& [key, _] : r.items()) {
    if (!known.count(key)) throw InputError("unknown key \"" + key + "\"");
  }
  if (!r.contains("vector")) throw InputError("record has no vector");
  const PicClass h = parse_vector_input(r.at("vector"));
  Params p = defaults;
  auto small = [](const Json& j, std::string_view what) {
    const Integer v = json_integer(j, what);
    if (!v.fits_slong_p()) throw InputError(std::string(what) + " is out of range");
    return v.get_si();
  };
  if (r.contains("a")) p.a = json_integer(r.at("a"), "a");
  if (r.contains("n")) p.n = small(r.at("n"), "n");
  if (r.contains("k")) p.k = small(r.at("k"), "k");
  if (r.contains("target")) {
    if (!r.at("target").is_string()) throw InputError("target must be a string");
    p.target = parse_target(r.at("target").get<std::string>());
  }
  return execute(command, h, p, f);
}

std::string indent(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out += "    " + line + "\n";
  return out;
}

std::string id_json(const std::optional<std::string>& id) { return id ? json_string(*id) : "null"; }

int run_batch(const std::string& command, const std::string& path, const Params& defaults, Format f,
              std::ostream& out, std::ostream& err) {
  std::vector<BatchItem> items;
  try {
    items = read_batch(path);
  } catch (const InputError& e) {
    emit_error({kUsage, e.what()}, f, out, err);
    return kUsage;
  }

  // Ids are checked up front so that the first occurrence wins regardless of
  // scheduling.
  std::set<std::string> seen;
  for (auto& item : items) {
    if (item.parse_error) continue;
    const Json& r = item.record;
    if (!r.is_object() || !r.contains("id")) {
      item.parse_error = "record has no id";
    } else if (!r.at("id").is_string()) {
      item.parse_error = "id must be a string";
    } else {
      item.id = r.at("id").get<std::string>();
      if (!seen.insert(*item.id).second) item.parse_error = "duplicate id \"" + *item.id + "\"";
    }
  }

  std::vector<std::optional<Outcome>> results(items.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      Outcome o = items[i].parse_error
                      ? Outcome{kUsage, *items[i].parse_error}
                      : guarded([&] { return run_record(command, items[i].record, defaults, f); });
      {
        std::lock_guard lock(mu);
        results[i] = std::move(o);
      }
      ready.notify_one();
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(items.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);

  // Emit in input order as soon as each prefix is complete.
  std::size_t ok = 0, failed = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    Outcome o;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return results[i].has_value(); });
      o = std::move(*results[i]);
    }
    const auto& id = items[i].id;
    if (o.code == kOk) {
      ++ok;
      if (f == Format::JsonLines) {
        std::string body = o.text;
        if (!body.empty() && body.back() == '\n') body.pop_back();
        out << ObjectWriter().raw("id", id_json(id)).raw("result", body).str() << "\n";
      } else {
        out << "[" << id.value_or("?") << "] ok\n" << indent(o.text);
      }
    } else {
      ++failed;
      if (f == Format::JsonLines) {
        out << ObjectWriter().raw("id", id_json(id)).field("error", o.text).field("exit_code", static_cast<long>(o.code)).str()
            << "\n";
      } else {
        out << "[" << id.value_or("?") << "] error: " << o.text << "\n";
      }
    }
    out.flush();
  }
  err << ok << " ok, " << failed << " failed\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact phi-function and positivity tools for unnodal Enriques surfaces"};
  app.name("enriques");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "human";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"human", "json-lines"}))
      ->capture_default_str();

  std::string vector_text, a_text, target_name = "gauss", file, batch_command;
  Params p;
  int radius = 0;

  auto add_vector = [&](CLI::App* sub) {
    sub->add_option("--vector", vector_text, "[u1,u2,e1..e8] or {\"u\":[..],\"e8\":[..],\"torsion\":0|1}")->required();
  };

  CLI::App* phi_cmd = app.add_subcommand("phi", "phi(H) with a witness isotropic class");
  add_vector(phi_cmd);
  phi_cmd->add_option("--radius", radius, "Cross-check against the box oracle")->group("");

  CLI::App* report_cmd = app.add_subcommand("report", "Numerical report for an ample H");
  add_vector(report_cmd);

  CLI::App* hilb_cmd = app.add_subcommand("hilb", "Nef and ampleness of L~ - aB on S^[n]");
  add_vector(hilb_cmd);
  hilb_cmd->add_option("--a", a_text, "Coefficient of B")->required();
  hilb_cmd->add_option("--n", p.n, "Hilbert scheme order")->capture_default_str();

  CLI::App* certify_cmd = app.add_subcommand("certify", "Surjectivity certificate for gamma^k");
  add_vector(certify_cmd);
  certify_cmd->add_option("--k", p.k, "Order of the Gaussian map")->capture_default_str();
  certify_cmd->add_option("--target", target_name, "gauss or prym")
      ->check(CLI::IsMember({"gauss", "prym"}))
      ->capture_default_str();

  CLI::App* batch_cmd = app.add_subcommand("batch", "Run one command over a file of records");
  batch_cmd->add_option("command", batch_command, "phi, report, hilb or certify")
      ->required()
      ->check(CLI::IsMember({"phi", "report", "hilb", "certify"}));
  batch_cmd->add_option("--file", file, "JSON lines or a JSON array of {id, vector, ...}")->required();
  batch_cmd->add_option("--a", a_text, "Default coefficient of B");
  batch_cmd->add_option("--n", p.n, "Default Hilbert scheme order");
  batch_cmd->add_option("--k", p.k, "Default order of the Gaussian map");
  batch_cmd->add_option("--target", target_name, "Default target")->check(CLI::IsMember({"gauss", "prym"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    const Format f = format_name == "json-lines" ? Format::JsonLines : Format::Human;
    emit_error({kUsage, e.what()}, f, out, err);
    return kUsage;
  }

  const Format f = format_name == "json-lines" ? Format::JsonLines : Format::Human;
  CLI::App* chosen = app.get_subcommands().front();
  if (*phi_cmd && phi_cmd->count("--radius")) p.radius = radius;

  if (chosen == batch_cmd) {
    Outcome setup = guarded([&] {
      if (!a_text.empty()) p.a = parse_integer_flag(a_text, "a");
      p.target = parse_target(target_name);
      return std::string();
    });
    if (setup.code != kOk) {
      emit_error(setup, f, out, err);
      return setup.code;
    }
    return run_batch(batch_command, file, p, f, out, err);
  }

  Outcome o = guarded([&] {
    const PicClass h = parse_vector_text(vector_text);
    if (!a_text.empty()) p.a = parse_integer_flag(a_text, "a");
    p.target = parse_target(target_name);
    return execute(chosen->get_name(), h, p, f);
  });
  if (o.code == kOk) {
    out << o.text;
    return kOk;
  }
  emit_error(o, f, out, err);
  return o.code;
}

}  // namespace enriques::cli
