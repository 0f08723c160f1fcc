#include "loopreps_cli/job_runner.hpp"

#include <map>
#include <algorithm>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>

#include "loopreps/json_io.hpp"
#include "loopreps/kxmod.hpp"
#include "loopreps/repclass.hpp"
#include "loopreps/series.hpp"
#include "loopreps/specchar.hpp"

namespace loopreps::cli {

using nlohmann::json;
namespace lj = loopreps::json;

namespace {

// Job-shape problem; maps to exit code 2.
struct Malformed {
  std::string what;
};

struct Command {
  std::string text;  // canonical echo
  std::string name;
  std::vector<std::string> positional;
  std::map<std::string, std::string> options;
};

const std::map<std::string, std::pair<int, int>> kArity = {
    {"validate-field", {0, 0}}, {"lw-info", {1, 1}},        {"conjugates", {1, 1}}, {"tensor", {2, 2}},
    {"rational-split", {1, 1}}, {"dual", {1, 1}},           {"blocks", {1, 1 << 20}}, {"kx-matrix", {1, 1}},
    {"embedding-rank", {2, 2}}, {"link-chain", {3, 3}},     {"series-check", {0, 0}},
};

const std::map<std::string, std::vector<std::string>> kOptions = {
    {"kx-matrix", {"node", "index"}}, {"link-chain", {"max-steps"}}, {"series-check", {"order", "type"}}};

std::vector<std::string> tokenize(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::string tokenFromJson(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

Command parseCommand(const json& j) {
  std::vector<std::string> tokens;
  if (j.is_string()) {
    tokens = tokenize(j.get<std::string>());
  } else if (j.is_object()) {
    if (!j.contains("cmd") || !j["cmd"].is_string()) throw Malformed{"command object needs a string \"cmd\""};
    tokens.push_back(j["cmd"].get<std::string>());
    if (j.contains("args")) {
      if (!j["args"].is_array()) throw Malformed{"\"args\" must be an array"};
      for (const auto& a : j["args"]) tokens.push_back(tokenFromJson(a));
    }
    for (const auto& [k, v] : j.items()) {
      if (k == "cmd" || k == "args") continue;
      tokens.push_back("--" + (k == "maxSteps" ? std::string("max-steps") : k));
      tokens.push_back(tokenFromJson(v));
    }
  } else {
    throw Malformed{"command must be a string or an object"};
  }
  if (tokens.empty()) throw Malformed{"empty command"};

  Command c;
  c.name = tokens[0];
  const auto ar = kArity.find(c.name);
  if (ar == kArity.end()) throw Malformed{"unknown command \"" + c.name + "\""};
  const auto allowedIt = kOptions.find(c.name);
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    if (tokens[k].rfind("--", 0) == 0) {
      const std::string key = tokens[k].substr(2);
      const bool allowed = allowedIt != kOptions.end() &&
                           std::find(allowedIt->second.begin(), allowedIt->second.end(), key) != allowedIt->second.end();
      if (!allowed) throw Malformed{"option --" + key + " not accepted by " + c.name};
      if (k + 1 == tokens.size()) throw Malformed{"option --" + key + " needs a value"};
      c.options[key] = tokens[++k];
    } else {
      c.positional.push_back(tokens[k]);
    }
  }
  const int n = static_cast<int>(c.positional.size());
  if (n < ar->second.first || n > ar->second.second) throw Malformed{c.name + ": wrong number of arguments"};
  c.text = c.name;
  for (const auto& p : c.positional) c.text += " " + p;
  for (const auto& [k, v] : c.options) c.text += " --" + k + " " + v;
  return c;
}

int parseInt(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size() || v < INT32_MIN || v > INT32_MAX) throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw Malformed{what + " must be an integer, got \"" + s + "\""};
  }
}

/// "[1,0]" or "1,0".
Weight parseWeight(const std::string& s) {
  const std::string text = (!s.empty() && s.front() == '[') ? s : "[" + s + "]";
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Malformed{"bad weight \"" + s + "\""};
  try {
    return lj::weightFromJson(j);
  } catch (const Error&) {
    throw Malformed{"bad weight \"" + s + "\""};
  }
}

std::string joinStrs(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
  return out;
}

struct Job {
  ContextPtr ctx;
  RootSystemPtr rs;
  std::map<std::string, LWeight> lweights;
  std::vector<std::string> order;  // declaration order of names
  std::vector<Command> commands;
};

class Runner {
 public:
  Runner(Job& job, const RunOptions& opt, std::ostream& out) : job_(job), opt_(opt), out_(out) {}

  json run(const Command& c) {
    if (c.name == "validate-field") return validateField();
    if (c.name == "lw-info") return lwInfo(lw(c.positional[0]));
    if (c.name == "conjugates") return conjugates(lw(c.positional[0]));
    if (c.name == "tensor") return tensor(lw(c.positional[0]), lw(c.positional[1]));
    if (c.name == "rational-split") return ratSplit(lw(c.positional[0]));
    if (c.name == "dual") return dual(lw(c.positional[0]));
    if (c.name == "blocks") return blocks(c.positional);
    if (c.name == "kx-matrix") return kxMatrix(c);
    if (c.name == "embedding-rank") return embRank(lw(c.positional[0]), lw(c.positional[1]));
    if (c.name == "link-chain") return linkChain(c);
    return seriesCheck(c);
  }

  bool lastCheckFailed = false;

 private:
  const LWeight& lw(const std::string& name) const { return job_.lweights.at(name); }

  void line(const std::string& s) {
    if (!opt_.quiet) out_ << "  " << s << "\n";
  }

  json validateField() {
    const auto& ctx = *job_.ctx;
    json basis = json::array();
    for (const auto& b : ctx.fixedSpaceBasis(ctx.subgroupH())) basis.push_back(lj::toJson(b));
    line("L degree " + std::to_string(ctx.degree()) + ", |G| = " + std::to_string(ctx.groupOrder()) +
         ", |H| = " + std::to_string(ctx.subgroupH().size()) + ", [K:Q] = " + std::to_string(ctx.baseDegree()));
    return {{"valid", true},
            {"degree", ctx.degree()},
            {"groupOrder", ctx.groupOrder()},
            {"subgroupOrder", ctx.subgroupH().size()},
            {"baseDegree", ctx.baseDegree()},
            {"baseFieldBasis", basis}};
  }

  json lwInfo(const LWeight& w) {
    const IrrClass c = classify(w);
    json orbit = json::array();
    for (const auto& o : c.orbit) orbit.push_back(lj::toJson(o));
    json r = {{"lweight", lj::toJson(w)}, {"orbit", orbit},  {"degree", c.degree},
              {"wt", lj::toJson(c.weight)}, {"dimF", c.dimF}, {"dimK", c.dimK}};
    line(w.str() + ": degree " + std::to_string(c.degree) + ", wt " + c.weight.str() + ", dimF " +
         std::to_string(c.dimF) + ", dimK " + std::to_string(c.dimK));
    if (job_.rs->name() == "A1") {
      r["weylDimF"] = dimWeylF(w);
      r["weylDimK"] = dimWeylK(w);
      line("Weyl module: dimF " + r["weylDimF"].dump() + ", dimK " + r["weylDimK"].dump());
    }
    return r;
  }

  json conjugates(const LWeight& w) {
    const ConjugacyClass cc = conjClass(w);
    json orbit = json::array();
    std::vector<std::string> names;
    for (const auto& o : cc.orbit) {
      orbit.push_back(lj::toJson(o));
      names.push_back(o.str());
    }
    line("orbit (" + std::to_string(cc.degree) + "): " + joinStrs(names, ", "));
    return {{"orbit", orbit}, {"degree", cc.degree}, {"stabilizer", lweightStabilizer(w).elements}};
  }

  json tensor(const LWeight& a, const LWeight& b) {
    const Decomposition d = tensorDecomposeK(a, b);
    for (const auto& [cls, m] : d.parts) {
      line("[" + cls.key.canonicalRep.str() + "] mult " + std::to_string(m) + ", degree " + std::to_string(cls.degree) +
           ", dimK " + std::to_string(cls.dimK));
    }
    const CompositumDegree cd = compositumDegree(a, b);
    const bool tp = tpIrreducibleCriterion(a, b);
    line("total dimK " + std::to_string(d.totalDimK()) + "; irreducible tensor product: " + (tp ? "yes" : "no"));
    return {{"decomposition", lj::toJson(d)},
            {"totalDimK", d.totalDimK()},
            {"tpIrreducible", tp},
            {"weylTensorCriterion", wtpCriterion(a, b)},
            {"relativelyPrime", relativelyPrime(a, b)},
            {"compositumDegree", cd.degree},
            {"degreeChainHolds", cd.chainHolds}};
  }

  json ratSplit(const LWeight& w) {
    const auto [k, rest] = rationalSplit(w);
    line("rational part " + k.str() + ", remainder " + rest.str());
    return {{"rational", lj::toJson(k)}, {"remainder", lj::toJson(rest)}};
  }

  json dual(const LWeight& w) {
    const LWeight d = dualLWeight(w);
    line("dual " + d.str());
    return {{"dual", lj::toJson(d)}};
  }

  json blocks(const std::vector<std::string>& names) {
    std::vector<LWeight> ws;
    for (const auto& n : names) ws.push_back(lw(n));
    const auto groups = partitionBlocks(ws);
    json out = json::array(), named = json::array();
    for (const auto& g : groups) {
      json arr = json::array(), nm = json::array();
      std::vector<std::string> label;
      for (const auto& w : g) {
        arr.push_back(lj::toJson(w));
        // first declared name bound to an equal value
        for (const auto& n : names) {
          if (lw(n) == w) {
            nm.push_back(n);
            label.push_back(n);
            break;
          }
        }
      }
      out.push_back(arr);
      named.push_back(nm);
      line("block {" + joinStrs(label, ", ") + "}");
    }
    json chars = json::object();
    for (const auto& n : names) chars[n] = lj::toJson(spectralCharacter(lw(n)));
    return {{"blocks", out}, {"names", named}, {"characters", chars}};
  }

  json kxMatrix(const Command& c) {
    const LWeight& w = lw(c.positional[0]);
    const KXModule m = buildKXModule(w);
    std::optional<std::pair<int, int>> pick;
    if (c.options.count("node") || c.options.count("index")) {
      const int node = c.options.count("node") ? parseInt(c.options.at("node"), "--node") : 1;
      const int index = c.options.count("index") ? parseInt(c.options.at("index"), "--index") : 1;
      pick = std::make_pair(node - 1, index);
      if (!m.generatorMatrices.count(*pick)) {
        throw Error(ErrorCode::InvalidArgument, "no generator at node " + std::to_string(node) + ", index " +
                                                    std::to_string(index));
      }
    }
    json mats = json::array();
    for (const auto& [key, mat] : m.generatorMatrices) {
      if (pick && key != *pick) continue;
      const bool fixed = isFixedByH(*job_.ctx, mat);
      const bool split = charPolySplitCheck(m, key.first, key.second);
      mats.push_back({{"node", key.first + 1},
                      {"index", key.second},
                      {"value", lj::toJson(m.generatorValues.at(key))},
                      {"matrix", lj::toJson(mat)},
                      {"fixedByH", fixed},
                      {"charPolySplits", split}});
      line("node " + std::to_string(key.first + 1) + ", index " + std::to_string(key.second) + ": " +
           std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) + ", fixed by H " + (fixed ? "yes" : "no") +
           ", charpoly splits " + (split ? "yes" : "no"));
    }
    line("dimension " + std::to_string(m.dim) + ", primitive " + m.primitive.str());
    return {{"dim", m.dim},
            {"primitive", lj::toJson(m.primitive)},
            {"stabilizer", m.stabilizer.elements},
            {"primitiveMatrix", {{"matrix", lj::toJson(m.primitiveMatrix)}, {"fixedByH", isFixedByH(*job_.ctx, m.primitiveMatrix)}}},
            {"generators", mats}};
  }

  json embRank(const LWeight& a, const LWeight& b) {
    const EmbeddingRank r = tensorEmbeddingRank(a, b);
    line("rank " + std::to_string(r.rank) + ", injective " + (r.injective ? "yes" : "no"));
    return {{"rank", r.rank}, {"injective", r.injective}, {"compositumDegree", compositumDegree(a, b).degree}};
  }

  json linkChain(const Command& c) {
    const RootSystemPtr rs = RootSystem::build(c.positional[0]);
    const Weight lam = parseWeight(c.positional[1]), mu = parseWeight(c.positional[2]);
    const int steps = c.options.count("max-steps") ? parseInt(c.options.at("max-steps"), "--max-steps") : opt_.maxSteps;
    const auto chain = rs->linkChain(lam, mu, steps);
    json arr = json::array();
    std::vector<std::string> names;
    for (const auto& w : chain) {
      arr.push_back(lj::toJson(w));
      names.push_back(w.str());
    }
    line("chain " + joinStrs(names, " -> "));
    return {{"type", rs->name()}, {"chain", arr}};
  }

  json seriesCheck(const Command& c) {
    const int order = c.options.count("order") ? parseInt(c.options.at("order"), "--order") : opt_.order;
    std::string type;
    if (c.options.count("type")) {
      type = c.options.at("type");
    } else if (job_.rs) {
      type = job_.rs->name();
    } else {
      throw Malformed{"series-check needs --type or a job lieType"};
    }
    const RootSystemPtr rs = RootSystem::build(type);
    json checks = json::array();
    bool all = true;
    for (const auto& chk : runSeriesChecks(*rs, order)) {
      checks.push_back({{"name", chk.name}, {"passed", chk.passed}});
      all = all && chk.passed;
      line(std::string(chk.passed ? "pass " : "FAIL ") + chk.name);
    }
    lastCheckFailed = !all;
    return {{"type", rs->name()}, {"order", order}, {"checks", checks}, {"allPassed", all}};
  }

  Job& job_;
  const RunOptions& opt_;
  std::ostream& out_;
};

// Throws Malformed for shape problems and Error for value problems.
Job loadJob(const json& j) {
  if (!j.is_object()) throw Malformed{"job must be a JSON object"};
  for (const auto& [k, v] : j.items()) {
    if (k != "field" && k != "lieType" && k != "lweights" && k != "commands") throw Malformed{"unknown key \"" + k + "\""};
  }
  if (!j.contains("commands") || !j["commands"].is_array()) throw Malformed{"\"commands\" must be an array"};
  Job job;
  for (std::size_t k = 0; k < j["commands"].size(); ++k) {
    try {
      job.commands.push_back(parseCommand(j["commands"][k]));
    } catch (const Malformed& m) {
      throw Malformed{"command " + std::to_string(k) + ": " + m.what};
    }
  }
  if (j.contains("lieType") && !j["lieType"].is_string()) throw Malformed{"\"lieType\" must be a string"};
  const json lws = j.value("lweights", json::object());
  if (!lws.is_object()) throw Malformed{"\"lweights\" must be an object of name -> factor list"};

  std::set<std::string> declared;
  for (const auto& [name, v] : lws.items()) declared.insert(name);
  for (std::size_t k = 0; k < job.commands.size(); ++k) {
    const Command& c = job.commands[k];
    if (c.name == "link-chain" || c.name == "series-check" || c.name == "validate-field") continue;
    for (const auto& n : c.positional) {
      if (!declared.count(n)) throw Malformed{"command " + std::to_string(k) + ": undeclared l-weight \"" + n + "\""};
    }
  }
  const bool needsField = !declared.empty() || std::any_of(job.commands.begin(), job.commands.end(), [](const Command& c) {
                            return c.name != "link-chain" && c.name != "series-check";
                          });
  if (needsField && !j.contains("field")) throw Malformed{"missing \"field\""};
  if (!declared.empty() && !j.contains("lieType")) throw Malformed{"missing \"lieType\""};

  if (j.contains("field")) job.ctx = lj::contextFromJson(j["field"]);
  if (j.contains("lieType")) job.rs = RootSystem::build(j["lieType"].get<std::string>());
  for (const auto& [name, v] : lws.items()) {
    job.lweights.emplace(name, lj::lweightFromJson(job.ctx, job.rs, v));
    job.order.push_back(name);
  }
  return job;
}

}  // namespace

RunResult runJob(const std::string& jobText, const RunOptions& options, std::ostream& out, std::ostream& err) {
  RunResult res;
  res.report = {{"schemaVersion", 1}, {"results", json::array()}};
  const json j = json::parse(jobText, nullptr, false);
  if (j.is_discarded()) {
    err << "malformed job: not valid JSON\n";
    res.exitCode = kMalformedJob;
    res.report["error"] = {{"kind", "malformed"}, {"message", "not valid JSON"}};
    return res;
  }

  Job job;
  try {
    job = loadJob(j);
  } catch (const Malformed& m) {
    err << "malformed job: " << m.what << "\n";
    res.exitCode = kMalformedJob;
    res.report["error"] = {{"kind", "malformed"}, {"message", m.what}};
    return res;
  } catch (const Error& e) {
    // shape errors from the JSON readers are still malformed-job errors
    const bool shape = e.code() == ErrorCode::ParseError;
    err << (shape ? "malformed job: " : "invalid job: ") << e.what() << "\n";
    res.exitCode = shape ? kMalformedJob : kValidationFailure;
    res.report["error"] = {{"kind", shape ? "malformed" : "validation"}, {"error", std::string(e.name())}, {"message", e.what()}};
    return res;
  }

  if (job.ctx) res.report["field"] = lj::toJson(*job.ctx);
  if (job.rs) res.report["lieType"] = job.rs->name();
  json lws = json::object();
  for (const auto& [name, w] : job.lweights) lws[name] = lj::toJson(w);
  res.report["lweights"] = lws;

  Runner runner(job, options, out);
  for (std::size_t k = 0; k < job.commands.size(); ++k) {
    const Command& c = job.commands[k];
    if (!options.quiet) out << "[" << k << "] " << c.text << "\n";
    json entry = {{"index", k}, {"command", c.text}};
    try {
      runner.lastCheckFailed = false;
      entry["result"] = runner.run(c);
      entry["status"] = runner.lastCheckFailed ? "failed" : "ok";
      if (runner.lastCheckFailed) {
        err << "command " << k << " (" << c.name << "): identity check failed\n";
        res.exitCode = std::max(res.exitCode, int(kValidationFailure));
      }
    } catch (const Malformed& m) {
      err << "command " << k << " (" << c.name << "): malformed: " << m.what << "\n";
      entry["status"] = "malformed";
      entry["message"] = m.what;
      res.exitCode = kMalformedJob;
    } catch (const Error& e) {
      err << "command " << k << " (" << c.name << "): " << e.what() << "\n";
      entry["status"] = "error";
      entry["error"] = std::string(e.name());
      entry["message"] = e.what();
      res.exitCode = std::max(res.exitCode, int(kValidationFailure));
    }
    res.report["results"].push_back(std::move(entry));
  }
  return res;
}

}  // namespace loopreps::cli
