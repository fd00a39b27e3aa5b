#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "idem2/json_io.hpp"

namespace py = pybind11;

namespace {

// Structured values cross the boundary as plain dicts/lists mirroring the
// CLI's JSON wire format.
py::object json_to_py(const idem2::Json& j) {
  using value_t = idem2::Json::value_t;
  switch (j.type()) {
    case value_t::object: {
      py::dict d;
      for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
      return d;
    }
    case value_t::array: {
      py::list l;
      for (const auto& value : j) l.append(json_to_py(value));
      return l;
    }
    case value_t::string:
      return py::str(j.get<std::string>());
    case value_t::boolean:
      return py::bool_(j.get<bool>());
    case value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

idem2::Json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) {
    try {
      return obj.cast<std::uint64_t>();
    } catch (const py::cast_error&) {
      return obj.cast<std::int64_t>();
    }
  }
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    idem2::Json j = idem2::Json::object();
    for (const auto& item : obj.cast<py::dict>()) {
      j[item.first.cast<std::string>()] = py_to_json(item.second);
    }
    return j;
  }
  if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
    idem2::Json j = idem2::Json::array();
    for (const auto& item : obj.cast<py::sequence>()) j.push_back(py_to_json(item));
    return j;
  }
  idem2::raise("ParseError",
               "cannot convert a " + std::string(py::str(obj.get_type())) +
                   " to a JSON value");
}

idem2::TruncationContext make_context(std::uint64_t n, std::uint32_t vars,
                                      std::uint32_t trunc) {
  return idem2::TruncationContext(idem2::Modulus(n), vars, trunc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact idempotents of 2x2 matrices over truncated power series with Z_n "
      "coefficients";
  m.attr("__version__") = "0.1.0";

  py::register_exception<idem2::Error>(m, "Error");

  m.def(
      "factorize",
      [](std::uint64_t n) {
        idem2::Modulus m(n);
        std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
        for (const auto& pp : m.factors()) out.emplace_back(pp.prime, pp.exponent);
        return out;
      },
      py::arg("n"), "Prime factorization of n as (prime, exponent) pairs.");

  m.def(
      "totient", [](std::uint64_t n) { return idem2::totient(n); }, py::arg("n"),
      "Euler totient; totient(1) == 1.");

  m.def(
      "idempotents_of_zn",
      [](std::uint64_t n) {
        std::vector<std::uint64_t> out;
        for (const auto& r : idem2::idempotents_of_zn(idem2::Modulus(n))) {
          out.push_back(r.value());
        }
        return out;
      },
      py::arg("n"), "All e in [0, n) with e*e == e mod n, ascending.");

  m.def(
      "crt_combine",
      [](std::uint64_t n, const std::vector<std::uint64_t>& residues) {
        return idem2::crt_combine(idem2::Modulus(n), residues).value();
      },
      py::arg("n"), py::arg("residues"),
      "Residue mod n matching residues[i] mod the i-th prime-power factor.");

  m.def(
      "validate_spec",
      [](const py::dict& spec) {
        return idem2::validate_spec(idem2::spec_from_json(py_to_json(spec)));
      },
      py::arg("spec"), "True iff alpha*(1-alpha) == beta*gamma mod P.");

  m.def(
      "construct",
      [](const py::dict& spec) {
        return json_to_py(
            idem2::mat2_to_json(idem2::construct_case(idem2::spec_from_json(py_to_json(spec)))));
      },
      py::arg("spec"), "Idempotent matrix for a spec, by the lifting formulas.");

  m.def(
      "construct_crt",
      [](const py::dict& spec) {
        return json_to_py(
            idem2::mat2_to_json(idem2::construct_crt(idem2::spec_from_json(py_to_json(spec)))));
      },
      py::arg("spec"),
      "Idempotent matrix for a spec, by coefficientwise Chinese remaindering.");

  m.def(
      "verify",
      [](const py::dict& matrix) {
        return idem2::is_idempotent(idem2::mat2_from_json(py_to_json(matrix)));
      },
      py::arg("matrix"), "True iff the matrix squares to itself.");

  m.def(
      "classify",
      [](const py::dict& matrix) {
        return json_to_py(
            idem2::spec_to_json(idem2::classify(idem2::mat2_from_json(py_to_json(matrix)))));
      },
      py::arg("matrix"), "Canonical spec of an idempotent matrix.");

  m.def(
      "enumerate_idempotents",
      [](std::uint64_t n, std::uint32_t vars, std::uint32_t trunc,
         std::uint64_t budget) {
        auto ctx = make_context(n, vars, trunc);
        std::vector<idem2::ClassifiedIdempotent> found;
        {
          py::gil_scoped_release release;
          found = idem2::enumerate_all(ctx, budget);
        }
        py::list out;
        for (const auto& ci : found) out.append(json_to_py(idem2::classified_to_json(ci)));
        return out;
      },
      py::arg("n"), py::arg("vars") = 0, py::arg("trunc") = 0,
      py::arg("budget") = idem2::kDefaultBudget,
      "Every idempotent of the ring, as spec dicts with a 'matrix' key.");

  m.def(
      "brute_force_idempotents",
      [](std::uint64_t n, std::uint32_t vars, std::uint32_t trunc,
         std::uint64_t budget, unsigned jobs) {
        auto ctx = make_context(n, vars, trunc);
        std::vector<idem2::Mat2> found;
        {
          py::gil_scoped_release release;
          found = idem2::brute_force_idempotents(ctx, budget, jobs);
        }
        py::list out;
        for (const auto& a : found) out.append(json_to_py(idem2::mat2_to_json(a)));
        return out;
      },
      py::arg("n"), py::arg("vars") = 0, py::arg("trunc") = 0,
      py::arg("budget") = idem2::kDefaultBudget, py::arg("jobs") = 1,
      "Exhaustive-search ground truth, as matrix dicts in scan order.");

  m.def(
      "brute_force_series_idempotents",
      [](std::uint64_t n, std::uint32_t vars, std::uint32_t trunc,
         std::uint64_t budget) {
        auto ctx = make_context(n, vars, trunc);
        std::vector<idem2::Series> found;
        {
          py::gil_scoped_release release;
          found = idem2::brute_force_series_idempotents(ctx, budget);
        }
        py::list out;
        for (const auto& f : found) out.append(json_to_py(idem2::series_to_json(f)));
        return out;
      },
      py::arg("n"), py::arg("vars") = 0, py::arg("trunc") = 0,
      py::arg("budget") = idem2::kDefaultBudget,
      "All idempotent series of the ring, by exhaustive search.");
}
