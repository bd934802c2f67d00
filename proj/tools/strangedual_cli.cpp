#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "strangedual/catalog.hpp"
#include "strangedual/fm_engine.hpp"
#include "strangedual/group.hpp"
#include "strangedual/mukai.hpp"
#include "strangedual/varieties.hpp"

namespace sd = strangedual;
using sd::Int;
using sd::mukai::MukaiVector;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

sd::varieties::SurfacePtr load_surface(const std::string& model_file) {
  if (model_file.empty()) return sd::varieties::abelian_product_surface();
  std::ifstream in(model_file);
  if (!in) throw std::invalid_argument("cannot open model file " + model_file);
  std::stringstream ss;
  ss << in.rdbuf();
  auto model = sd::varieties::model_from_json(ss.str());
  if (model.factor_count() != 2 || model.factor(0).dim != 1 || model.factor(1).dim != 1)
    throw std::invalid_argument("model must be a product of two elliptic factors");
  return std::make_shared<sd::varieties::Surface>(model.factor(0).label, 1,
                                                  model.factor(1).label);
}

int cmd_transform(const std::string& vec, const std::string& kernel, const std::string& model,
                  bool as_json) {
  auto x = load_surface(model);
  MukaiVector v = MukaiVector::parse(vec, x);
  auto k = sd::fm::kernel_by_name(kernel, x);
  MukaiVector out = sd::fm::transform(v, k);
  if (as_json) {
    nlohmann::json j;
    j["input"] = nlohmann::json::parse(v.json());
    j["kernel"] = kernel;
    j["output"] = nlohmann::json::parse(out.json());
    j["trace"] = nlohmann::json::array({{{"op", "kernel"}, {"detail", k.name()}}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << v.str() << " --" << kernel << "--> " << out.str() << "\n";
    std::cout << "det " << kernel << " = O(" << out.a << "s+" << out.b << "f)\n";
  }
  return kExitOk;
}

int cmd_pair(const std::string& vs, const std::string& ws, const std::string& model,
             bool as_json) {
  auto x = load_surface(model);
  MukaiVector v = MukaiVector::parse(vs, x), w = MukaiVector::parse(ws, x);
  Int chi = sd::mukai::product_chi(v, w);
  Int dv = sd::mukai::half_dim(v), dw = sd::mukai::half_dim(w);
  if (as_json) {
    nlohmann::json j;
    j["v"] = nlohmann::json::parse(v.json());
    j["w"] = nlohmann::json::parse(w.json());
    j["chi_vw"] = chi.str();
    j["d_v"] = dv.str();
    j["d_w"] = dw.str();
    j["orthogonal"] = (chi == 0);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "chi(v.w) = " << chi << (chi == 0 ? "  (orthogonal)" : "") << "\n";
    std::cout << "d_v = " << dv << ", d_w = " << dw << "\n";
  }
  return kExitOk;
}

int cmd_verlinde(const std::string& vs, const std::string& ws, const std::string& side,
                 const std::string& model, bool as_json) {
  auto x = load_surface(model);
  MukaiVector v = MukaiVector::parse(vs, x), w = MukaiVector::parse(ws, x);
  auto s = side == "minus" ? sd::mukai::Side::Minus : sd::mukai::Side::Plus;
  auto res = sd::mukai::verlinde_count(v, w, s);
  if (as_json) {
    nlohmann::json j;
    j["chi_L"] = res.chi_L.str();
    j["d_v"] = res.dv.str();
    j["d_w"] = res.dw.str();
    j["count"] = res.count.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "chi(L" << (s == sd::mukai::Side::Plus ? "+" : "-") << ") = " << res.chi_L
              << ", d_v = " << res.dv << ", d_w = " << res.dw << "\n";
    std::cout << "count = " << res.count << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& filter, bool as_json, const Int& solver_limit) {
  sd::catalog::RunOptions opts;
  opts.filter = filter.empty() ? "*" : filter;
  opts.solver_group_order_limit = solver_limit;
  auto rep = sd::catalog::run_catalog(opts);
  if (as_json) {
    std::cout << sd::catalog::report_to_json(rep) << "\n";
  } else {
    for (const auto& c : rep.checks) {
      std::cout << (c.status == "pass"         ? "PASS "
                    : c.status == "unresolved" ? "UNRES"
                    : c.status == "rejected"   ? "REJ  "
                                               : "FAIL ")
                << " " << c.id << "  [" << c.lhs << (c.lhs.empty() ? "" : " | ") << c.rhs
                << "]\n";
    }
    std::cout << rep.passed() << " passed, " << rep.failed() << " failed, " << rep.unresolved()
              << " unresolved, " << rep.rejected() << " rejected\n";
  }
  return rep.ok() ? kExitOk : kExitCheckFailure;
}

int cmd_search(const Int& max_r, const Int& max_m, const Int& max_chi, const std::string& model,
               bool as_json) {
  auto x = load_surface(model);
  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream table;
  int count = 0;
  for (Int r = 1; r <= max_r; ++r)
    for (Int s = r; s <= max_r; ++s)
      for (Int m = -max_m; m <= max_m; ++m)
        for (Int n = m; n <= max_m; ++n)
          for (Int chi = -max_chi; chi <= max_chi; ++chi)
            for (Int chip = -max_chi; chip <= max_chi; ++chip) {
              MukaiVector v(r, 1, m, chi, x), w(s, 1, n, chip, x);
              if (sd::mukai::product_chi(v, w) != 0) continue;
              Int dv = sd::mukai::half_dim(v), dw = sd::mukai::half_dim(w);
              std::string verl = "-";
              if (dv + dw > 0 && dv >= 0 && dw >= 0) {
                try {
                  verl = sd::mukai::verlinde_count(v, w, sd::mukai::Side::Plus).count.str();
                } catch (const std::exception&) {
                }
              }
              ++count;
              if (as_json) {
                rows.push_back({{"v", v.str()},
                                {"w", w.str()},
                                {"d_v", dv.str()},
                                {"d_w", dw.str()},
                                {"verlinde", verl}});
              } else {
                table << v.str() << "  " << w.str() << "  d_v=" << dv << " d_w=" << dw
                      << " count=" << verl << "\n";
              }
            }
  if (as_json) {
    std::cout << nlohmann::json{{"pairs", rows}}.dump(2) << "\n";
  } else {
    std::cout << table.str() << count << " orthogonal pairs\n";
  }
  return kExitOk;
}

sd::ledger::IntMat read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  std::vector<std::vector<Int>> rows;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    nlohmann::json j = nlohmann::json::parse(text);
    const auto& m = j.is_object() ? j.at("matrix") : j;
    for (const auto& jr : m) {
      std::vector<Int> row;
      for (const auto& e : jr)
        row.emplace_back(e.is_string() ? Int(e.get<std::string>()) : Int(e.get<long long>()));
      rows.push_back(std::move(row));
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream ls(line);
      std::vector<Int> row;
      std::string tok;
      while (ls >> tok) row.emplace_back(tok);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) throw std::invalid_argument("matrix file holds no rows");
  sd::ledger::IntMat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

nlohmann::json mat_json(const sd::ledger::IntMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

int cmd_smith(const std::string& path, bool as_json) {
  auto m = read_matrix(path);
  auto s = sd::ledger::smith(m);
  nlohmann::json j;
  j["U"] = mat_json(s.U);
  j["D"] = mat_json(s.D);
  j["V"] = mat_json(s.V);
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "D diagonal:";
    for (const auto& d : s.diagonal()) std::cout << " " << d;
    std::cout << "\n" << j.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for product abelian surface transforms"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string vec, wvec, kernel = "rs", model, filter, side = "plus", matrix_file;
  long long max_r = 3, max_m = 5, max_chi = 2, solver_limit = 200;

  auto* t = app.add_subcommand("transform", "apply a named kernel to a Mukai vector");
  t->add_option("-v,--vector", vec, "vector in the form r:(a s + b f):chi")->required();
  t->add_option("--kernel", kernel, "rs | rsdagger | u:a,b,r,d");
  t->add_option("--model", model, "JSON model descriptor file");

  auto* p = app.add_subcommand("pair", "Euler pairing and dimension data of two vectors");
  p->add_option("-v,--vector", vec)->required();
  p->add_option("-w,--with", wvec)->required();
  p->add_option("--model", model);

  auto* vl = app.add_subcommand("verlinde", "theta-bundle Euler characteristic count");
  vl->add_option("-v,--vector", vec)->required();
  vl->add_option("-w,--with", wvec)->required();
  vl->add_option("--side", side, "plus | minus");
  vl->add_option("--model", model);

  std::string identity;
  auto* vp = app.add_subcommand("verify-paper", "run the identity catalog");
  vp->add_option("--filter", filter, "glob over check ids");
  vp->add_option("--identity", identity, "run a single check by exact id");
  vp->add_option("--solver-limit", solver_limit, "group order bound for the solver oracle");

  auto* so = app.add_subcommand("search-orthogonal", "enumerate orthogonal vector pairs");
  so->add_option("--max-r", max_r);
  so->add_option("--max-m", max_m);
  so->add_option("--max-chi", max_chi);
  so->add_option("--model", model);

  auto* sm = app.add_subcommand("smith", "Smith normal form of an integer matrix");
  sm->add_option("matrix", matrix_file, "JSON or whitespace matrix file")->required();

  try {
    app.parse(argc, argv);
    if (t->parsed()) return cmd_transform(vec, kernel, model, as_json);
    if (p->parsed()) return cmd_pair(vec, wvec, model, as_json);
    if (vl->parsed()) return cmd_verlinde(vec, wvec, side, model, as_json);
    if (vp->parsed()) {
      if (!identity.empty() && !filter.empty())
        throw std::invalid_argument("--identity and --filter are mutually exclusive");
      return cmd_verify(identity.empty() ? filter : identity, as_json, solver_limit);
    }
    if (so->parsed()) return cmd_search(max_r, max_m, max_chi, model, as_json);
    if (sm->parsed()) return cmd_smith(matrix_file, as_json);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
