#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heckecentre/artin.hpp"
#include "heckecentre/cli.hpp"
#include "heckecentre/error.hpp"
#include "heckecentre/fiber.hpp"
#include "heckecentre/hecke.hpp"
#include "heckecentre/partitions.hpp"
#include "heckecentre/permutation.hpp"
#include "heckecentre/symmetric.hpp"

namespace py = pybind11;
using namespace hc;

namespace {

// Rationals cross the boundary as fractions.Fraction; inputs may also be
// int or str.
py::object to_py(const Rat& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(rat_to_string(r));
}

Rat from_py(const py::handle& h) { return parse_rat(py::str(h).cast<std::string>()); }

FiberPoint fiber_point(const std::vector<std::vector<py::object>>& roots) {
  FiberPoint fp;
  for (const auto& b : roots) {
    std::vector<Rat> block;
    for (const auto& r : b) block.push_back(from_py(r));
    fp.roots.push_back(std::move(block));
  }
  return fp;
}

py::list nested(const std::vector<std::vector<Rat>>& v) {
  py::list out;
  for (const auto& b : v) {
    py::list block;
    for (const auto& r : b) block.append(to_py(r));
    out.append(block);
  }
  return out;
}

LinkageMode linkage(const std::string& mode) {
  if (mode == "within") return LinkageMode::WithinBlock;
  if (mode == "all") return LinkageMode::AllPairs;
  throw Error(Errc::ParseError, "mode must be 'within' or 'all'");
}

std::vector<std::vector<int>> rows_of(const Tableau& t) { return t.rows; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact centre, fiber and multiplicity computations";

  // Messages start with the error code name, e.g. "NotAPower: ...".
  py::register_exception<Error>(m, "HeckeError", PyExc_ValueError);

  m.def("centre_point", [](const std::vector<std::vector<py::object>>& roots) {
    return nested(centre_point_of(fiber_point(roots)).a);
  }, py::arg("roots"));

  m.def("char_poly", [](const std::vector<py::object>& a) {
    std::vector<Rat> v;
    for (const auto& x : a) v.push_back(from_py(x));
    const RatUPoly f = char_poly(v);
    py::list out;
    for (const auto& c : f.coeffs()) out.append(to_py(c));
    return out;
  }, py::arg("a"), "Coefficients, constant term first.");

  m.def("dense_set", [](const std::vector<std::vector<py::object>>& roots, py::object q, const std::string& mode) {
    const FiberPoint fp = fiber_point(roots);
    int max_e = 1;
    for (const auto& b : fp.roots) max_e = std::max(max_e, static_cast<int>(b.size()));
    const auto v = in_dense_set(fp, QParam::make(from_py(q), max_e), linkage(mode));
    py::dict out;
    out["kind"] = v.kind_name();
    if (!v.in_s()) {
      out["first"] = py::make_tuple(v.first.first, v.first.second);
      out["second"] = py::make_tuple(v.second.first, v.second.second);
      if (v.kind == DenseSetVerdict::Kind::Linked) out["ratio"] = to_py(v.ratio);
    }
    return out;
  }, py::arg("roots"), py::arg("q") = 2, py::arg("mode") = "within");

  m.def("split_check", [](const std::vector<std::vector<py::object>>& roots) {
    const auto s = split_check(fiber_point(roots));
    py::dict out;
    out["dim"] = s.dim;
    out["split"] = s.split;
    out["det"] = to_py(s.det);
    return out;
  }, py::arg("roots"));

  m.def("artin_basis", [](int e) {
    std::vector<std::vector<int>> out;
    for (const auto& nu : artin_basis(e)) out.push_back(nu.nu);
    return out;
  }, py::arg("e"));

  m.def("disc_power", [](int e) {
    const auto d = disc_power_check(e);
    py::dict out;
    out["delta"] = d.delta.to_string();
    out["d"] = d.d.to_string();
    out["c"] = to_py(d.c);
    out["k"] = d.k;
    return out;
  }, py::arg("e"), "Delta = c d^k in symmetric coordinates.");

  m.def("f_lambda", [](const std::vector<int>& parts) { return f_lambda(Partition(parts)); }, py::arg("parts"));
  m.def("partitions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : partitions_of(n)) out.push_back(p.parts());
    return out;
  }, py::arg("n"));
  m.def("mult", [](const std::vector<std::vector<int>>& blocks) {
    PartitionFn p;
    for (const auto& b : blocks) p.blocks.emplace_back(b);
    return mult_of(p);
  }, py::arg("blocks"));
  m.def("identity_check", [](const std::vector<int>& shape, std::uint64_t max_group) {
    const auto r = identity_check(BlockShape(shape), max_group);
    py::dict out;
    out["sum_m_sq"] = r.sum_m_sq;
    out["w_size"] = r.w_size;
    out["ok"] = r.ok;
    return out;
  }, py::arg("shape"), py::arg("max_group") = 5040);
  m.def("count_mult_one", [](const std::vector<int>& shape) { return count_mult_one(BlockShape(shape)); },
        py::arg("shape"));
  m.def("rsk", [](const std::vector<int>& w) {
    const auto r = rsk(Perm(w));
    return py::make_tuple(rows_of(r.p), rows_of(r.q));
  }, py::arg("w"), "0-based images; returns the (P, Q) rows.");

  m.def("simple_check", [](int e, py::object q, const std::vector<py::object>& roots) {
    const Rat qq = from_py(q);
    QParam::make(qq, e);
    std::vector<py::object> block(roots);
    const CentrePoint cp = centre_point_of(fiber_point({block}));
    const auto a = SpecAlgebra::specialize(e, qq, cp);
    const auto v = simple_check(a);
    py::dict out;
    out["dim"] = a.dim();
    out["centre_dim"] = v.centre_dim;
    out["semisimple"] = v.semisimple;
    out["matrix_algebra"] = v.matrix_algebra;
    return out;
  }, py::arg("e"), py::arg("q"), py::arg("roots"));

  m.def("to_sym_coords", [](const std::vector<int>& shape, const std::string& poly) {
    return to_sym_coords(BlockShape(shape), parse_lpoly(poly)).to_string();
  }, py::arg("shape"), py::arg("poly"));
  m.def("from_sym_coords", [](const std::vector<int>& shape, const std::string& coords) {
    return from_sym_coords(BlockShape(shape), SymCoords{parse_lpoly(coords)}).to_string();
  }, py::arg("shape"), py::arg("coords"));

  m.def("run_command", [](const std::string& name, const std::string& config_json) {
    cli::RunConfig cfg;
    try {
      cli::apply_json(cfg, nlohmann::json::parse(config_json));
    } catch (const nlohmann::json::exception& e) {
      const auto r = cli::config_error_report(name, Error(Errc::ParseError, e.what()));
      return py::make_tuple(r.body.dump(), r.exit_code);
    } catch (const Error& e) {
      const auto r = cli::config_error_report(name, e);
      return py::make_tuple(r.body.dump(), r.exit_code);
    }
    const auto r = cli::run_command(name, cfg);
    return py::make_tuple(r.body.dump(), r.exit_code);
  }, py::arg("name"), py::arg("config_json") = "{}", "Returns (report JSON text, exit code).");
}
