#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cctype>
#include <optional>
#include <string>

#include "expdio/arith.hpp"
#include "expdio/assoc.hpp"
#include "expdio/errors.hpp"
#include "expdio/parity.hpp"
#include "expdio/report_json.hpp"
#include "expdio/search.hpp"
#include "expdio/solver.hpp"

namespace py = pybind11;
using namespace expdio;

namespace {

BigInt big(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

bool is_decimal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// Reports come back as plain dicts; decimal strings (the JSON form of big
// integers) become Python ints.
py::object to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string: {
      const auto& s = j.get_ref<const std::string&>();
      if (is_decimal(s)) return to_py(BigInt(s));
      return py::str(s);
    }
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_py(v));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default:
      return py::none();
  }
}

BoundPolicy make_policy(const Equation& eq, const std::optional<std::string>& bound,
                        const std::optional<py::int_>& cap) {
  const BigInt cap_value = cap ? big(*cap) : default_power_cap();
  if (!bound) return default_policy(eq, cap_value);
  const BoundKind kind = parse_bound_kind(*bound);
  if (kind == BoundKind::cap) return BoundPolicy::capped(cap_value);
  return {kind, 0};
}

py::tuple cls_tuple(ParityClass c) { return py::make_tuple(c.ex, c.ey); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exponential Diophantine equations a^x + b^y = c^z";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<EffortExceeded>(m, "EffortExceeded", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("is_prime", [](const py::int_& n) { return is_prime(big(n)); });
  m.def("factorize", [](const py::int_& n) {
    py::list out;
    for (const auto& e : factorize(big(n)).entries)
      out.append(py::make_tuple(to_py(e.prime), e.exponent));
    return out;
  });
  m.def("mul_order", [](const py::int_& a, const py::int_& c) {
    return to_py(mul_order(big(a), big(c)));
  });
  m.def("find_primitive_root", [](const py::int_& p) { return to_py(find_primitive_root(big(p))); });
  m.def("discrete_log", [](const py::int_& d, const py::int_& a, const py::int_& p) {
    return to_py(discrete_log(big(d), big(a), big(p)));
  });
  m.def("sqrt_mod", [](const py::int_& n, const py::int_& p) {
    py::list out;
    for (const auto& t : sqrt_mod(big(n), big(p))) out.append(to_py(t));
    return out;
  });
  m.def("perfect_power_decompose", [](const py::int_& s) {
    const auto pd = perfect_power_decompose(big(s));
    return py::make_tuple(to_py(pd.base), pd.exponent);
  });

  m.def("allowed_classes", [](const py::int_& a, const py::int_& b, const py::int_& c) {
    py::set out;
    for (const auto& cls : allowed_classes(big(a), big(b), big(c))) out.add(cls_tuple(cls));
    return out;
  });
  m.def("check_order_condition", [](const py::int_& a, const py::int_& b, const py::int_& c) {
    return check_order_condition(big(a), big(b), big(c));
  });
  m.def("count_factorizations", [](const py::int_& c) { return to_py(count_factorizations(big(c))); });
  m.def("gamma_components",
        [](const py::int_& a, const py::int_& b, unsigned long x, unsigned long y) {
          return to_py(to_json(gamma_components(big(a), big(b), x, y)));
        });
  m.def("association_signature",
        [](const py::int_& a, const py::int_& b, const py::int_& c, unsigned long x,
           unsigned long y, unsigned long z) {
          return to_py(to_json(association_signature(Equation::make(big(a), big(b), big(c)),
                                                     {x, y, z})));
        });

  m.def(
      "solve",
      [](const py::int_& a, const py::int_& b, const py::int_& c,
         std::optional<std::string> bound, std::optional<py::int_> cap, unsigned jobs) {
        const auto eq = Equation::make(big(a), big(b), big(c));
        const auto policy = make_policy(eq, bound, cap);
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = enumerate_solutions(eq, policy, {jobs});
        }
        return to_py(to_json(r));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("bound") = py::none(),
      py::arg("cap") = py::none(), py::arg("jobs") = 1,
      "All solutions with z up to the chosen bound.");
  m.def(
      "verify",
      [](const py::int_& a, const py::int_& b, const py::int_& c, std::size_t expect,
         std::optional<std::string> bound, std::optional<py::int_> cap, unsigned jobs) {
        const auto eq = Equation::make(big(a), big(b), big(c));
        const auto policy = make_policy(eq, bound, cap);
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = verify_triple(eq, expect, policy, {jobs});
        }
        return to_py(to_json(r));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("expect"),
      py::arg("bound") = py::none(), py::arg("cap") = py::none(), py::arg("jobs") = 1);
  m.def(
      "search",
      [](unsigned long a_max, unsigned long b_max, const py::int_& cap, unsigned jobs,
         std::optional<std::string> checkpoint, bool resume) {
        SearchConfig config;
        config.a_max = a_max;
        config.b_max = b_max;
        config.power_cap = big(cap);
        config.jobs = jobs;
        config.checkpoint_path = checkpoint;
        config.resume = resume;
        SearchReport report;
        {
          py::gil_scoped_release release;
          report = search_range(config);
        }
        Json j;
        j["report"] = to_json(report);
        j["conjecture"] = to_json(compare_with_conjecture(report));
        return to_py(j);
      },
      py::arg("a_max"), py::arg("b_max"), py::arg("cap"), py::arg("jobs") = 1,
      py::arg("checkpoint") = py::none(), py::arg("resume") = false,
      "Triples with two or more solutions, diffed against the known list.");
}
