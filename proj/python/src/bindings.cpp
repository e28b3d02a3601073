#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gopkit/census.hpp"
#include "gopkit/count.hpp"
#include "gopkit/gop.hpp"
#include "gopkit/maps.hpp"
#include "gopkit/orbit.hpp"
#include "gopkit/rigid.hpp"

namespace py = pybind11;
using namespace gopkit;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(v).c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& v) { return BigInt(std::string(py::str(v))); }

std::vector<Point> images_of(const FunctionTable& f) { return {f.images().begin(), f.images().end()}; }

py::dict census_dict(const GopCensus& c) {
  py::dict out;
  for (const auto& [g, count] : c.counts) out[py::tuple(py::cast(g.orders()))] = to_py(count);
  return out;
}

MapSpec map_of(const std::string& kind, std::optional<double> ell) {
  if (kind == "logistic") {
    if (ell) throw py::value_error("ell only applies to tentpow");
    return MapSpec::logistic();
  }
  if (kind == "tentpow") {
    if (!ell) throw py::value_error("tentpow needs ell");
    return MapSpec::tentpow(*ell);
  }
  throw py::value_error("map must be 'logistic' or 'tentpow'");
}

GridSpec grid_of(std::uint32_t n, const std::string& denominator, const std::string& rounding) {
  GridSpec g;
  g.n = n;
  if (denominator == "n") g.denominator = Denominator::n;
  else if (denominator == "n-1") g.denominator = Denominator::n_minus_one;
  else throw py::value_error("denominator must be 'n' or 'n-1'");
  if (rounding == "floor") g.rounding = Rounding::floor;
  else if (rounding == "nearest-half-up") g.rounding = Rounding::nearest_half_up;
  else if (rounding == "nearest-half-down") g.rounding = Rounding::nearest_half_down;
  else throw py::value_error("rounding must be floor, nearest-half-up or nearest-half-down");
  return g;
}

}  // namespace

PYBIND11_MODULE(_gopkit, m) {
  m.doc() = "Global orbit patterns of endofunctions of finite sets";

  m.def("parse_function", [](const std::string& text) { return images_of(parse_function(text)); },
        py::arg("text"));
  m.def("function_literal", [](std::vector<Point> f) { return to_literal(FunctionTable(std::move(f))); },
        py::arg("images"));

  m.def(
      "analyze",
      [](std::vector<Point> f) {
        const OrbitStructure s = analyze(FunctionTable(std::move(f)));
        py::list out;
        for (const auto& c : s.components) {
          py::dict d;
          d["representative"] = c.representative;
          d["period"] = c.period;
          d["cycle"] = c.cycle;
          d["component"] = c.basin;
          d["attractive"] = c.attractive;
          out.append(d);
        }
        return out;
      },
      py::arg("images"), "Components ordered by least element.");

  m.def("gop_of", [](std::vector<Point> f) { return gop_of(FunctionTable(std::move(f))).orders(); },
        py::arg("images"));
  m.def("rank", [](std::vector<Point> f) { return to_py(rank(FunctionTable(std::move(f)))); }, py::arg("images"));
  m.def("unrank", [](std::uint32_t n, const py::int_& r) { return images_of(unrank(n, from_py(r))); },
        py::arg("n"), py::arg("rank"));
  m.def("threshold", [](std::uint32_t n, std::vector<std::uint32_t> orders) {
        return images_of(threshold(Gop(n, std::move(orders))));
      }, py::arg("n"), py::arg("orders"));
  m.def("all_gops", [](std::uint32_t n) {
        std::vector<std::vector<std::uint32_t>> out;
        for (const Gop& g : all_gops(n)) out.push_back(g.orders());
        return out;
      }, py::arg("n"), "All gops of F_n in pseudo-decimal order.");
  m.def("gop_compare", [](std::uint32_t n, std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
        const auto c = gop_compare(Gop(n, std::move(a)), Gop(n, std::move(b)));
        return c < 0 ? -1 : c > 0 ? 1 : 0;
      }, py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("parse_gop", [](const std::string& text) {
        const Gop g = parse_gop(text);
        return py::make_tuple(g.n(), g.orders());
      }, py::arg("text"), "Returns (n, orders).");
  m.def("count_gop", [](std::uint32_t n, std::vector<std::uint32_t> orders) {
        return to_py(count_gop(Gop(n, std::move(orders))));
      }, py::arg("n"), py::arg("orders"));

  m.def("census", [](std::uint32_t n, std::uint32_t jobs, bool allow_large) {
        CensusOptions opts;
        opts.jobs = jobs;
        opts.partitions = jobs * 8;
        opts.allow_large = allow_large;
        GopCensus c;
        {
          py::gil_scoped_release release;
          c = census_partitioned(n, {}, opts);
        }
        return census_dict(c);
      }, py::arg("n"), py::arg("jobs") = 1, py::arg("allow_large") = false,
      "Exhaustive census of F_n: {orders: count}.");
  m.def("enumerate_rigid", [](std::uint32_t n, std::vector<std::uint32_t> alphas, std::uint64_t q,
                              const std::string& boundary, std::uint32_t jobs) {
        WindowBoundary b;
        if (boundary == "full") b = WindowBoundary::full;
        else if (boundary == "truncated") b = WindowBoundary::truncated;
        else throw py::value_error("boundary must be 'full' or 'truncated'");
        RigidOptions opts;
        opts.jobs = jobs;
        const RigidSpec spec(std::move(alphas), q, b);
        GopCensus c;
        {
          py::gil_scoped_release release;
          c = enumerate_rigid(n, spec, opts);
        }
        return census_dict(c);
      }, py::arg("n"), py::arg("alphas"), py::arg("q"), py::arg("boundary") = "full", py::arg("jobs") = 1);

  m.def("discretize", [](std::uint32_t n, const std::string& map, std::optional<double> ell,
                         const std::string& denominator, const std::string& rounding) {
        return images_of(discretize(map_of(map, ell), grid_of(n, denominator, rounding)));
      }, py::arg("n"), py::arg("map") = "logistic", py::arg("ell") = py::none(),
      py::arg("denominator") = "n-1", py::arg("rounding") = "floor");
  m.def("orbit_report", [](std::uint32_t n, const std::string& map, std::optional<double> ell,
                           const std::string& denominator, const std::string& rounding) {
        py::list out;
        for (const auto& c : orbit_report(map_of(map, ell), grid_of(n, denominator, rounding)).cycles) {
          py::dict d;
          d["period"] = c.period;
          d["cycle"] = c.cycle;
          d["basin"] = c.basin_size;
          d["attractive"] = c.attractive;
          out.append(d);
        }
        return out;
      }, py::arg("n"), py::arg("map") = "logistic", py::arg("ell") = py::none(),
      py::arg("denominator") = "n-1", py::arg("rounding") = "floor");
  m.def("double_precision_cycle", [](std::uint32_t seeds, std::uint64_t rng_seed, const std::string& map,
                                     std::optional<double> ell, std::uint32_t jobs) {
        const MapSpec spec = map_of(map, ell);
        std::vector<CycleHits> hits;
        {
          py::gil_scoped_release release;
          hits = double_precision_cycle(spec, seeds, rng_seed, jobs);
        }
        py::list out;
        for (const auto& h : hits) out.append(py::make_tuple(h.length, h.least, h.hits));
        return out;
      }, py::arg("seeds"), py::arg("rng_seed"), py::arg("map") = "logistic", py::arg("ell") = py::none(),
      py::arg("jobs") = 1, "List of (cycle length, least point, hits).");
}
