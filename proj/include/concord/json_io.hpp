#pragma once
#include <string>

#include "json.hpp"

#include "concord/alexander.hpp"
#include "concord/cfk.hpp"
#include "concord/dinv.hpp"
#include "concord/obstruction.hpp"
#include "concord/signatures.hpp"
#include "concord/staircase.hpp"

namespace concord {

using ordered_json = nlohmann::ordered_json;

// Canonical dump: 2-space indent, trailing newline. All report JSON goes
// through here so identical configs serialize byte-identically.
std::string dump(const ordered_json& j);

ordered_json laurent_json(const LaurentPoly& p);
ordered_json alexander_json(const KnotPtr& knot);

ordered_json staircase_json(const LatticeStaircase& st);

struct VsReport {
    KnotPtr knot;
    StepVector steps; // doubled
    VSequence vs;
    std::vector<int> oracle; // empty unless --oracle
};
ordered_json vs_json(const VsReport& r);

ordered_json dtable_json(const DTable& t);
std::string dtable_csv(const DTable& t);

ordered_json verdict_json(const Verdict& v);

struct ObstructReport {
    KnotPtr companion;
    KnotPtr family;
    int n = 1;
    std::vector<Verdict> verdicts;
    bool not_slice = false;
};
ordered_json obstruct_json(const ObstructReport& r);

ordered_json jump_json(const JumpFunction& f);
ordered_json independence_json(const IndependenceResult& r);

// Plain-text renderers (the only place timings appear).
std::string vs_text(const VsReport& r);
std::string dtable_text(const DTable& t);
std::string obstruct_text(const ObstructReport& r);
std::string independence_text(const IndependenceResult& r);

// CSV renderers; dtable's layout (i,d,dbar) is the reference one.
std::string vs_csv(const VsReport& r);
std::string staircase_csv(const LatticeStaircase& st);
std::string alexander_csv(const KnotPtr& knot);
std::string obstruct_csv(const ObstructReport& r);
std::string independence_csv(const IndependenceResult& r);

} // namespace concord
