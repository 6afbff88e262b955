// Scratch bench for shell iteration. Not part of the deliverable build.
#include <iostream>

#include "tilepipe/fixtures.hpp"
#include "tilepipe/helicity.hpp"
#include "tilepipe/shells.hpp"

using namespace tilepipe;

static void report(const std::string& name, const Region& rg, const Tiling& t, const Shell& sh) {
    std::cout << "=== " << name << " ===\n";
    try {
        CurveSystem sys = assemble_curves(rg, t, sh);
        std::cout << "curves: " << sys.curves.size() << "\n";
        TabulationMatrix tm = tabulation_matrix(sys);
        auto nt = tm.nontrivial();
        std::cout << "nontrivial: " << nt.size() << "\n";
        for (size_t i : nt) {
            std::cout << "  [";
            for (size_t j : nt) std::cout << " " << tm.m[i][j];
            std::cout << " ]  (curve " << i << ", " << sys.curves[i].v.size() << " verts)\n";
        }
        HelicityValue h = helicity(sys);
        std::cout << "Hel = " << h.in_phi2 << " phi^2\n";
    } catch (const Error& e) {
        std::cout << "ERROR: " << e.what() << "\n";
    }
}

int main(int argc, char** argv) {
    std::string what = argc > 1 ? argv[1] : "all";
    if (what == "all" || what == "221") {
        Region rg = fixtures::box221();
        auto ts = enumerate_tilings(rg);
        Shell sh = shell_box221();
        report("box221 t0", rg, ts[0], sh);
        report("box221 t1", rg, ts[1], sh);
    }
    if (what == "all" || what == "hex") {
        Region rg = fixtures::hex_region();
        Shell sh = shell_hex();
        report("hex t0", rg, fixtures::hex_t0(), sh);
        report("hex t1", rg, fixtures::hex_t1(), sh);
    }
    if (what == "all" || what == "332") {
        Region rg = fixtures::box332();
        Shell sh = shell_box332();
        report("332 vertical", rg, fixtures::vertical332(), sh);
        report("332 propeller", rg, fixtures::propeller332(false), sh);
        report("332 propeller-mirror", rg, fixtures::propeller332(true), sh);
    }
    return 0;
}
