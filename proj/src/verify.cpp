#include "hw/verify.hpp"

#include "hw/group_algebra.hpp"
#include "hw/hurwitz.hpp"
#include "hw/partition.hpp"
#include "hw/weightgen.hpp"

#include <sstream>

namespace hw {

namespace {

std::string partition_str(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        s += (i ? "," : "") + std::to_string(p.parts()[i]);
    return s + "]";
}

}  // namespace

VerifyResult verify_core(int n, int D) {
    static const char* kPresets[] = {"exp", "E", "Ek:2", "Ek:3", "H", "Eprime:1/3",
                                     "classical:1,1/2"};
    std::ostringstream os;
    os << "core suite: n=" << n << " degrees 0.." << D << "\n";
    auto parts = all_partitions(n);
    bool paths_ok = n <= brute_force_cap() && D <= kPathCap;
    if (!paths_ok) os << "note: path route skipped (caps)\n";

    for (const char* name : kPresets) {
        WeightGenerator g = WeightGenerator::parse(name);
        HurwitzTable ref = weighted_H_character_table(g, n, D);
        for (int d = 0; d <= D; ++d) {
            os << "preset " << name << " d=" << d << ":";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    const Rat& h = ref.values[d][i][j];
                    os << " " << to_string(h);
                    if (paths_ok) {
                        Rat f = weighted_F_paths(g, parts[i], parts[j], d);
                        if (f != h) {
                            os << "\nMISMATCH character vs paths: preset " << name << " d=" << d
                               << " mu=" << partition_str(parts[i])
                               << " nu=" << partition_str(parts[j]) << " character="
                               << to_string(h) << " paths=" << to_string(f) << "\nFAIL\n";
                            return {false, os.str()};
                        }
                    }
                    Rat geo = weighted_H_geometric(g, parts[i], parts[j], d);
                    if (geo != h) {
                        os << "\nMISMATCH character vs geometric: preset " << name << " d=" << d
                           << " mu=" << partition_str(parts[i])
                           << " nu=" << partition_str(parts[j]) << " character=" << to_string(h)
                           << " geometric=" << to_string(geo) << "\nFAIL\n";
                        return {false, os.str()};
                    }
                }
            }
            os << "\n";
        }
    }
    os << "PASS\n";
    return {true, os.str()};
}

}  // namespace hw
