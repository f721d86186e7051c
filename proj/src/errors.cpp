#include "linkgap/errors.hpp"

namespace linkgap {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::mixed_dimension: return "MixedDimension";
    case Errc::duplicate_vertex_in_simplex: return "DuplicateVertexInSimplex";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_a_simplex: return "NotASimplex";
    case Errc::link_empty: return "LinkEmpty";
    case Errc::not_disjoint: return "NotDisjoint";
    case Errc::join_not_a_simplex: return "JoinNotASimplex";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::not_a_bijection: return "NotABijection";
    case Errc::invalid_action: return "InvalidAction";
    case Errc::not_invariant: return "NotInvariant";
    case Errc::inconsistent_relations: return "InconsistentRelations";
    case Errc::singular: return "Singular";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::degree_overflow: return "DegreeOverflow";
    case Errc::degree_underflow: return "DegreeUnderflow";
    case Errc::disconnected_link: return "DisconnectedLink";
    case Errc::empty_link: return "EmptyLink";
    case Errc::isolated_vertex: return "IsolatedVertex";
    case Errc::too_large: return "TooLarge";
    case Errc::parse_error: return "ParseError";
    case Errc::schema_error: return "SchemaError";
    case Errc::unknown_vertex: return "UnknownVertex";
  }
  return "UnknownError";
}

}  // namespace linkgap
