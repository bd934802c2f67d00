#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "strangedual/catalog.hpp"
#include "strangedual/fm_engine.hpp"
#include "strangedual/group.hpp"
#include "strangedual/mukai.hpp"
#include "strangedual/varieties.hpp"

namespace py = pybind11;
namespace sd = strangedual;

namespace {

sd::mukai::MukaiVector parse_vec(const std::string& s) {
  return sd::mukai::MukaiVector::parse(s, sd::varieties::abelian_product_surface());
}

sd::ledger::IntMat to_mat(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  sd::ledger::IntMat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<std::string>> from_mat(const sd::ledger::IntMat& m) {
  std::vector<std::vector<std::string>> out(m.rows, std::vector<std::string>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[i][j] = m.at(i, j).str();
  return out;
}

}  // namespace

PYBIND11_MODULE(_strangedual, m) {
  m.doc() = "exact transform and identity-verification engine for product abelian surfaces";

  m.def("transform", [](const std::string& vec, const std::string& kernel) {
    auto x = sd::varieties::abelian_product_surface();
    return sd::fm::transform(parse_vec(vec), sd::fm::kernel_by_name(kernel, x)).str();
  });

  m.def("product_chi", [](const std::string& v, const std::string& w) {
    return sd::mukai::product_chi(parse_vec(v), parse_vec(w)).str();
  });

  m.def("half_dim", [](const std::string& v) { return sd::mukai::half_dim(parse_vec(v)).str(); });

  m.def("verlinde_count",
        [](const std::string& v, const std::string& w, const std::string& side) {
          auto s = side == "minus" ? sd::mukai::Side::Minus : sd::mukai::Side::Plus;
          return sd::mukai::verlinde_count(parse_vec(v), parse_vec(w), s).count.str();
        },
        py::arg("v"), py::arg("w"), py::arg("side") = "plus");

  m.def("euler_char_line", [](long long a, long long b) {
    return sd::varieties::abelian_product_surface()->euler_char_line(a, b).str();
  });

  m.def("smith", [](const std::vector<std::vector<long long>>& rows) {
    auto s = sd::ledger::smith(to_mat(rows));
    return py::make_tuple(from_mat(s.U), from_mat(s.D), from_mat(s.V));
  });

  m.def("torsion_count",
        [](int g, long long r) { return sd::ledger::torsion_count(g, r).str(); });

  m.def(
      "run_catalog",
      [](const std::string& filter, long long solver_limit) {
        sd::catalog::RunOptions opts;
        opts.filter = filter;
        opts.solver_group_order_limit = solver_limit;
        auto rep = sd::catalog::run_catalog(opts);
        py::list out;
        for (const auto& c : rep.checks) {
          py::dict d;
          d["id"] = c.id;
          d["description"] = c.description;
          d["status"] = c.status;
          d["lhs"] = c.lhs;
          d["rhs"] = c.rhs;
          d["runtime_ms"] = c.runtime_ms;
          out.append(d);
        }
        return out;
      },
      py::arg("filter") = "*", py::arg("solver_limit") = 60);

  m.def("catalog_ids", [] { return sd::catalog::catalog_ids(); });
}
