#include "swarmtrust/detection.hpp"

#include <stdexcept>

namespace swarmtrust {

void validate(const DetectorSpec& spec) {
    if (!(spec.p_md >= 0.0 && spec.p_md <= 1.0))
        throw std::invalid_argument("p_md must be in [0, 1]");
    if (!(spec.p_fa >= 0.0 && spec.p_fa <= 1.0))
        throw std::invalid_argument("p_fa must be in [0, 1]");
}

bool classify(bool attacked_now, const DetectorSpec& spec, Pcg32& rng) {
    const double p_flag = attacked_now ? 1.0 - spec.p_md : spec.p_fa;
    return rng.bernoulli(p_flag);
}

}  // namespace swarmtrust
