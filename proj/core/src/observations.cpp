#include "iwkin/observations.hpp"

#include <algorithm>

#include "iwkin/spectral.hpp"

namespace iwkin {

namespace {

ObservationRecord make_record(std::string name, Interval a, Interval b, WavenumberBasis basis,
                              std::string notes) {
    ObservationRecord r;
    r.name = std::move(name);
    r.omega_exponent = a;
    r.vertical_exponent = b;
    r.wavenumber_basis = basis;
    // endpoint-wise through the exponent conversion (x = a + 2, y = b - a)
    const SpectralExponents s_lo = action_exponents(a.lo, b.lo);
    const SpectralExponents s_hi = action_exponents(a.hi, b.hi);
    r.derived_x = {std::min(s_lo.x, s_hi.x), std::max(s_lo.x, s_hi.x)};
    r.derived_y = {std::min(s_lo.y, s_hi.y), std::max(s_lo.y, s_hi.y)};
    r.notes = std::move(notes);
    return r;
}

}  // namespace

const char* to_string(WavenumberBasis b) {
    return b == WavenumberBasis::Vertical ? "VERTICAL" : "HORIZONTAL";
}

std::vector<ObservationRecord> builtin_observations() {
    std::vector<ObservationRecord> out;
    out.push_back(make_record(
        "MODE", 1.6, 2.25, WavenumberBasis::Vertical,
        "Mid-Ocean Dynamics Experiment, Sargasso Sea (26 00'N 69 40'W), Mar-Jul 1973 [L76]"));
    out.push_back(make_record(
        "IWEX", 1.75, {2.0, 2.8}, WavenumberBasis::Horizontal,
        "Internal Wave Experiment, Sargasso Sea thermocline (27 44'N 69 51'W), Nov-Dec 1973 "
        "[M78]; exponents published against horizontal wavenumber"));
    out.push_back(make_record(
        "AIWEX", 1.2, 2.15, WavenumberBasis::Vertical,
        "Arctic Internal Wave Experiment, Canada Basin thermocline (74N 143-146W), Mar-May 1985 "
        "[Letal87, DandM91]"));
    out.push_back(make_record(
        "FASINEX", 1.75, {1.9, 2.0}, WavenumberBasis::Vertical,
        "Frontal Air-Sea Interaction Experiment, Sargasso Sea thermocline (27N 70W), Jan-Jun "
        "1986 [WandME, Eetal91]"));
    out.push_back(make_record(
        "PATCHEX", {1.65, 2.0}, 1.75, WavenumberBasis::Vertical,
        "Patches Experiment, eastern subtropical North Pacific (34N 127W), Oct 1986 [SandP91]"));
    out.push_back(make_record(
        "SWAPP", 2.0, 1.9, WavenumberBasis::Vertical,
        "Surface Wave Process Program, eastern subtropical North Pacific thermocline (35N 127W), "
        "Mar 1990 [A92]"));
    out.push_back(make_record(
        "NATRE", 0.6, 2.75, WavenumberBasis::Vertical,
        "North Atlantic Tracer Release Experiment, eastern subtropical North Atlantic "
        "thermocline (26N 29W), Feb-Oct 1992 [P03]; fit over 1-6 cpd"));
    return out;
}

}  // namespace iwkin
