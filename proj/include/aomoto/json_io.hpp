#ifndef AOMOTO_JSON_IO_HPP
#define AOMOTO_JSON_IO_HPP

#include <json.hpp>

#include "aomoto/bases.hpp"

namespace aomoto {

using Json = nlohmann::json;

Json oselement_to_json(const OSElement& e);
Json index_sets_to_json(const std::vector<IndexSet>& sets);

Json lattice_report(const Arrangement& a);
Json circuits_report(const Arrangement& a);
Json nbc_report(const Arrangement& a);
Json betanbc_report(const Arrangement& a, const std::string& method);
Json charpoly_report(const Arrangement& a);
Json folkman_report(const Arrangement& a);
Json betti_report(const Arrangement& a);
Json osdims_report(const Arrangement& a);
Json aomoto_report(const Arrangement& a, const WeightVector& w);
Json basis_report(const Arrangement& a, const WeightVector& w);
Json monomial_check_report(const Arrangement& a, const WeightVector& w);
Json transition_report(const Arrangement& a, const std::vector<int>& order,
                       const std::vector<WeightVector>& samples);
Json dense_report(const Arrangement& a, bool with_infinity);
Json nonresonance_report(const Arrangement& a, const WeightVector& w, bool paper_example_compat);

struct VerifyOutcome {
    bool ok = true;
    Json report;
};

/// The full invariant suite for one arrangement (and optional weights); the
/// single entry point shared by the CLI and the acceptance run.
VerifyOutcome verify_report(const Arrangement& a, const WeightVector* w,
                            bool paper_example_compat);

}  // namespace aomoto

#endif
