#pragma once

#include <string>
#include <vector>

#include "lzeta/oracle.hpp"
#include "lzeta/zetafun.hpp"

namespace lzeta {

// Canonical JSON renderings. Keys keep a fixed insertion order and rationals
// render as "a" or "a/b", so parsing an emitted document and dumping it again
// is byte-identical. indent < 0 means compact.

std::string polytope_json(const NewtonPolytope& P, int indent = -1);
std::string partition_json(const ConicalPartition& part, int indent = -1);
std::string fan_json(const SimpleFan& fan, int indent = -1);
std::string report_json(const NondegeneracyReport& rep, int indent = -1);
std::string zeta_json(const ZetaFunction& Z, int indent = -1);
std::string estimate_json(const IntegralEstimate& est, int indent = -1);

/// Everything the pipeline produced, for the CLI's json mode.
struct PipelineData {
    const ZetaFunction* zeta = nullptr;
    const NondegeneracyReport* weak = nullptr;
    const NondegeneracyReport* khovanskii = nullptr;
    const SimpleFan* fan = nullptr;
    const GeneratorClasses* classes = nullptr;
    std::vector<PoleData> poles_partition, poles_fan;
    Band band_partition, band_fan;
};

std::string pipeline_json(const PipelineData& data, int indent = 2);

}  // namespace lzeta
