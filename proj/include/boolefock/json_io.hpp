#ifndef BOOLEFOCK_JSON_IO_HPP_
#define BOOLEFOCK_JSON_IO_HPP_

// JSON encodings of the kernel types.
//
//   complex            [re, im]
//   Index              "#" or a positive integer (object keys: "#" or "3")
//   BooleanElement     {"scalar": c, "compact": [{"row": i, "col": i, "amp": c}, ...]}
//                      entries row-major, vacuum first
//   FockVector         {"#": c, "3": c, ...}
//   TestAlgebraElement {"a": c, "b": c, "c": c, "d": c, "beta": c}
//   FinitePermutation  {"map": {"1": 2, "2": 1}}
//   TraceClassOperator {"eigenpairs": [{"weight": w, "vector": FockVector}, ...]}
//   BooleanState       {"gamma": g, "T": TraceClassOperator}   (T optional when g == 0)
//   TailElement        {"x": c, "y": c}
//   PhiState           {"kind": "singular"} | {"kind": "normal", "S": TraceClassOperator}
//   Letter             {"site": j, "A": TestAlgebraElement}
//
// Decoding failures throw std::invalid_argument (or nlohmann::json::exception
// for type mismatches); domain invariants are enforced by the constructors.

#include <json.hpp>

#include "boolefock/algebra.hpp"
#include "boolefock/fock.hpp"
#include "boolefock/states.hpp"
#include "boolefock/tail.hpp"

namespace boolefock {

nlohmann::json complex_to_json(Complex c);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace boolefock

namespace nlohmann {

#define BOOLEFOCK_JSON_SERIALIZER(Type)          \
  template <>                                    \
  struct adl_serializer<Type> {                  \
    static void to_json(json& j, const Type& x); \
    static Type from_json(const json& j);        \
  };

BOOLEFOCK_JSON_SERIALIZER(boolefock::Index)
BOOLEFOCK_JSON_SERIALIZER(boolefock::BooleanElement)
BOOLEFOCK_JSON_SERIALIZER(boolefock::FockVector)
BOOLEFOCK_JSON_SERIALIZER(boolefock::TestAlgebraElement)
BOOLEFOCK_JSON_SERIALIZER(boolefock::FinitePermutation)
BOOLEFOCK_JSON_SERIALIZER(boolefock::TraceClassOperator)
BOOLEFOCK_JSON_SERIALIZER(boolefock::BooleanState)
BOOLEFOCK_JSON_SERIALIZER(boolefock::TailElement)
BOOLEFOCK_JSON_SERIALIZER(boolefock::PhiState)
BOOLEFOCK_JSON_SERIALIZER(boolefock::Letter)

#undef BOOLEFOCK_JSON_SERIALIZER

}  // namespace nlohmann

#endif  // BOOLEFOCK_JSON_IO_HPP_
