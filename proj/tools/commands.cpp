// Copyright 2026 The CGD Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>
#include <utility>
#include <vector>

#include "cgd/blocks.hpp"
#include "cgd/dot.hpp"
#include "cgd/dynamics.hpp"
#include "cgd/family.hpp"
#include "cgd/marked.hpp"
#include "cgd/modulo.hpp"
#include "cgd/reversibility.hpp"
#include "cgd/text_format.hpp"

namespace cgd::cli {
namespace {

namespace fs = std::filesystem;

// Ordered key=value lines.
class Summary {
 public:
  template <typename T>
  void add(const std::string& key, const T& value) {
    std::ostringstream s;
    s << std::boolalpha << value;
    lines_.emplace_back(key, s.str());
  }
  void print(std::ostream& out) const {
    for (const auto& [k, v] : lines_) out << k << '=' << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

// Graph body on one line, for reports.
std::string OneLine(const CanonicalGraph& g) {
  std::istringstream in(SerializeGraph(g));
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind("vertex ", 0) != 0 && line.rfind("edge ", 0) != 0) continue;
    if (!out.empty()) out += "; ";
    out += line;
  }
  return out;
}

std::string Numbered(const std::string& stem, std::size_t i,
                     const std::string& ext) {
  std::string n = std::to_string(i);
  if (n.size() < 3) n.insert(0, 3 - n.size(), '0');
  return stem + "_" + n + ext;
}

fs::path OutputDir(const RunConfig& cfg) {
  fs::path dir = cfg.output.empty() ? fs::path(".") : fs::path(cfg.output);
  fs::create_directories(dir);
  return dir;
}

// The identity accepts any alphabet; families for it are drawn over {a, b}.
AlphabetPtr FamilyAlphabet(const Dynamics& d) {
  return d.alphabet() ? d.alphabet() : TurtleAlphabet();
}

std::string DefaultFamily(const std::string& dynamics) {
  if (dynamics == "moving-head" || dynamics == "moving-head-inverse") {
    return "single-head-tape";
  }
  if (dynamics == "inflating-grid") return "grid";
  return "all";
}

GraphFamily LoadFamily(const RunConfig& cfg, const Dynamics& d) {
  const std::string name =
      cfg.family.empty() ? DefaultFamily(cfg.dynamics) : cfg.family;
  return NamedFamily(name, FamilyAlphabet(d), cfg.max_vertices);
}

int ExceptionBound(const RunConfig& cfg) {
  return cfg.exception_bound ? *cfg.exception_bound
                             : DefaultExceptionBound(cfg.dynamics);
}

// ---------------------------------------------------------------------------

int Run(const RunConfig& cfg, std::ostream& out) {
  const Dynamics d = DynamicsByName(cfg.dynamics);
  CanonicalGraph x = ParseCanonicalGraph(ReadFile(cfg.input));
  const fs::path dir = OutputDir(cfg);
  Summary s;
  s.add("command", "run");
  s.add("dynamics", d.name());
  s.add("steps", cfg.steps);
  for (std::size_t i = 0; i < cfg.steps; ++i) {
    if (i > 0) x = d.Apply(x).image;
    WriteFile((dir / Numbered("step", i, ".graph")).string(), SerializeGraph(x));
    if (cfg.render) {
      DotOptions o;
      o.graph_name = Numbered("step", i, "");
      o.caption = "F^" + std::to_string(i) + "(X)";
      WriteFile((dir / Numbered("step", i, ".dot")).string(), ToDot(x, o));
    }
  }
  s.add("files", cfg.steps);
  s.add("final_vertices", x.vertex_count());
  s.add("output", dir.string());
  s.print(out);
  return kOk;
}

int Verify(const RunConfig& cfg, std::ostream& out) {
  const Dynamics d = DynamicsByName(cfg.dynamics);
  const GraphFamily fam = LoadFamily(cfg, d);
  std::size_t failures = 0;

  std::size_t shift_failures = 0, bound_failures = 0;
  for (const CanonicalGraph& x : fam) {
    if (CheckResult r = CheckShiftInvariance(d, x); !r) {
      if (shift_failures++ == 0) out << "shift invariance: " << r.detail() << '\n';
    }
    if (d.declared_bound()) {
      if (CheckResult r = CheckBoundedness(d, x, *d.declared_bound()); !r) {
        if (bound_failures++ == 0) out << "boundedness: " << r.detail() << '\n';
      }
    }
  }
  failures += shift_failures + bound_failures;

  const CheckResult bijective = CheckBijectiveOnFamily(d, fam);
  if (!bijective) {
    out << "bijectivity: " << bijective.detail() << '\n';
    ++failures;
  }
  const std::vector<CanonicalGraph> exceptions =
      VertexPreservationExceptions(d, fam);
  for (std::size_t i = 0; i < exceptions.size(); ++i) {
    out << "exception " << i + 1 << ": " << OneLine(exceptions[i]) << '\n';
  }

  std::size_t inverse_failures = 0;
  if (bijective) {
    const InverseTable t = BuildInverse(d, fam);
    for (const CheckResult& r :
         {t.CheckCompositionIdentities(), t.CheckCorrespondenceInverse()}) {
      if (!r) {
        out << "inverse: " << r.detail() << '\n';
        ++inverse_failures;
      }
    }
    if (!cfg.output.empty()) WriteFile(cfg.output, t.Serialize());
  }
  failures += inverse_failures;

  out << "report: " << (bijective ? "bijective" : "not bijective") << ", "
      << (exceptions.empty() ? "vertex-preserving" : "not vertex-preserving")
      << ", exception set "
      << (exceptions.empty() ? "∅"
                             : "of size " + std::to_string(exceptions.size()))
      << '\n';
  Summary s;
  s.add("command", "verify");
  s.add("dynamics", d.name());
  s.add("family_size", fam.size());
  s.add("shift_invariance_failures", shift_failures);
  s.add("boundedness_failures", bound_failures);
  s.add("bijective", bijective.ok());
  s.add("vertex_preserving", exceptions.empty());
  s.add("exceptions", exceptions.size());
  s.add("inverse_failures", inverse_failures);
  s.add("status", failures == 0 ? "ok" : "failed");
  s.print(out);
  return failures == 0 ? kOk : kAssertionFailed;
}

int Enumerate(const RunConfig& cfg, std::ostream& out) {
  const Dynamics d = DynamicsByName(cfg.dynamics.empty() ? "identity"
                                                         : cfg.dynamics);
  const GraphFamily fam = LoadFamily(cfg, d);
  const std::string text = SerializeGraphs(fam.members());
  Summary s;
  s.add("command", "enumerate");
  s.add("family", cfg.family.empty() ? DefaultFamily(cfg.dynamics) : cfg.family);
  s.add("max_vertices", cfg.max_vertices);
  s.add("size", fam.size());
  if (cfg.output.empty()) {
    out << text;
    s.print(std::cerr);
  } else {
    WriteFile(cfg.output, text);
    s.print(out);
  }
  return kOk;
}

// Coded inverses where they exist; otherwise the inverse is tabulated on
// the marked closure of the given graphs.
BlockSystem SystemFor(const RunConfig& cfg, const GraphFamily& seeds) {
  const int p = ExceptionBound(cfg);
  const Dynamics f = DynamicsByName(cfg.dynamics);
  if (cfg.dynamics == "moving-head") {
    return MakeBlockSystemFromInverse(f, MovingHeadInverse(), p,
                                      MovingHeadAlphabet());
  }
  if (cfg.dynamics == "moving-head-inverse") {
    return MakeBlockSystemFromInverse(f, MovingHead(), p, MovingHeadAlphabet());
  }
  if (cfg.dynamics == "identity") {
    return MakeBlockSystemFromInverse(f, f, p, seeds.alphabet());
  }
  return MakeBlockSystem(f, p, seeds);
}

int Decompose(const RunConfig& cfg, std::ostream& out) {
  const CanonicalGraph x = ParseCanonicalGraph(ReadFile(cfg.input));
  std::vector<CanonicalGraph> pointings;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(x.vertex_count()); ++v) {
    pointings.push_back(ShiftTo(x, v).graph);
  }
  const BlockSystem sys = SystemFor(cfg, GraphFamily(x.alphabet(), pointings));
  const DecompositionTrace t = BlockDecompose(sys, x);
  const Step direct = sys.f.Apply(x);
  const bool preserving = static_cast<bool>(CheckVertexPreserving(sys.f, x));
  const bool matches = t.result == direct.image;
  const CheckResult shape = CheckTraceShape(t);
  if (!shape) out << "trace: " << shape.detail() << '\n';

  const fs::path dir = OutputDir(cfg);
  if (cfg.trace) {
    for (std::size_t i = 0; i < t.panels.size(); ++i) {
      WriteFile((dir / Numbered("panel", i, ".graph")).string(),
                "# " + t.captions[i] + "\n" + SerializeGraph(t.panels[i]));
      if (cfg.render) {
        DotOptions o;
        o.graph_name = Numbered("panel", i, "");
        o.caption = t.captions[i];
        WriteFile((dir / Numbered("panel", i, ".dot")).string(),
                  ToDot(t.panels[i], o));
      }
    }
  }
  WriteFile((dir / "result.graph").string(), SerializeGraph(t.result));

  // Where F merges or creates vertices the product of blocks cannot follow
  // it, and only the shape of the trace is checked.
  const bool ok = shape.ok() && (matches || !preserving);
  Summary s;
  s.add("command", "decompose");
  s.add("dynamics", sys.f.name());
  s.add("vertices", x.vertex_count());
  s.add("conjugate_blocks", t.conjugate_blocks);
  s.add("mark_blocks", t.mark_blocks);
  s.add("panels", t.panels.size());
  s.add("vertex_preserving", preserving);
  s.add("matches_f", matches);
  s.add("trace_shape", shape.ok());
  s.add("output", dir.string());
  s.add("status", ok ? "ok" : "failed");
  s.print(out);
  return ok ? kOk : kAssertionFailed;
}

int CheckBlocks(const RunConfig& cfg, std::ostream& out) {
  const Dynamics f = DynamicsByName(cfg.dynamics);
  const GraphFamily fam = LoadFamily(cfg, f);
  const BlockSystem sys = MakeBlockSystem(f, ExceptionBound(cfg), fam);
  std::size_t failures = 0, skipped = 0;

  for (const CanonicalGraph& x : fam) {
    if (!CheckVertexPreserving(f, x)) {
      ++skipped;
      continue;
    }
    const DecompositionTrace t = BlockDecompose(sys, x);
    const CheckResult shape = CheckTraceShape(t);
    if (t.result != f.Apply(x).image || !shape) {
      if (failures++ == 0) {
        out << "decomposition differs from F on " << OneLine(x) << '\n';
        if (!shape) out << "trace: " << shape.detail() << '\n';
      }
    }
  }

  const auto radius = FindLocalityRadius(sys.conjugate, *sys.closure, 4);
  int max_reach = 0;
  std::size_t max_depth = 0, depth_bound = 0;
  if (!radius) {
    out << "locality: no radius up to 4\n";
    ++failures;
  } else {
    const LocalityReport rep = CheckLocality(sys.conjugate, *radius, *sys.closure);
    if (!rep.to_the_t) {
      out << "locality: " << rep.to_the_t.detail() << '\n';
      ++failures;
    }
    for (const CanonicalGraph& x : fam) {
      if (!CheckVertexPreserving(f, x)) continue;
      const FootprintReport fp = CheckBlockFootprint(sys, x, *radius);
      max_reach = std::max(max_reach, fp.max_reach);
      max_depth = std::max(max_depth, fp.max_depth);
      depth_bound = fp.depth_bound;
      if (!fp.contained) {
        if (failures++ == 0) out << "footprint: " << fp.contained.detail() << '\n';
      }
    }
  }

  Summary s;
  s.add("command", "check-blocks");
  s.add("dynamics", f.name());
  s.add("family_size", fam.size());
  s.add("closure_size", sys.closure->size());
  s.add("skipped_not_vertex_preserving", skipped);
  s.add("locality_radius", radius ? std::to_string(*radius) : "none");
  s.add("max_reach", max_reach);
  s.add("max_depth", max_depth);
  s.add("depth_bound", depth_bound);
  s.add("failures", failures);
  s.add("status", failures == 0 ? "ok" : "failed");
  s.print(out);
  return failures == 0 ? kOk : kAssertionFailed;
}

int ExportDot(const RunConfig& cfg, std::ostream& out) {
  const std::vector<CanonicalGraph> graphs =
      ParseCanonicalGraphs(ReadFile(cfg.input));
  std::string text;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    DotOptions o;
    o.graph_name = graphs.size() == 1 ? "G" : "G" + std::to_string(i);
    o.caption = cfg.caption;
    text += ToDot(graphs[i], o);
  }
  if (cfg.output.empty()) {
    out << text;
  } else {
    WriteFile(cfg.output, text);
    Summary s;
    s.add("command", "export-dot");
    s.add("graphs", graphs.size());
    s.add("output", cfg.output);
    s.print(out);
  }
  return kOk;
}

}  // namespace

int RunCommand(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command == "run") return Run(cfg, out);
  if (cfg.command == "verify") return Verify(cfg, out);
  if (cfg.command == "enumerate") return Enumerate(cfg, out);
  if (cfg.command == "decompose") return Decompose(cfg, out);
  if (cfg.command == "check-blocks") return CheckBlocks(cfg, out);
  if (cfg.command == "export-dot") return ExportDot(cfg, out);
  throw Error("unknown command '" + cfg.command + "'");
}

}  // namespace cgd::cli
