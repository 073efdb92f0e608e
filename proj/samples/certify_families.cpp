// Certifies every family member of a few degrees, prints one line per datum,
// and cross-checks the small ones against the monodromy oracle.
#include <cstdio>
#include <variant>

#include "hurwitz/hurwitz.hpp"

int main()
{
    using namespace hurwitz;
    int failures = 0;
    for (int d : {4, 6, 8, 9, 12}) {
        for (const auto& f : all_instances(d)) {
            const auto outcome = certify_exceptional(f.datum, f.recommended_beta);
            const auto* cert = std::get_if<ExceptionalityCertificate>(&outcome);
            std::string oracle = "-";
            if (d <= 7) oracle = to_string(find_witness(f.datum).status);
            std::printf("%-6s %-40s beta=%-14s %s  oracle=%s\n", to_string(f.family), format_datum(f.datum).c_str(),
                        format_angles(f.recommended_beta).c_str(), cert ? "certified" : "REFUSED", oracle.c_str());
            if (!cert) ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
