// export.hpp: eigenvalue lists of an instance as CSV or flat binary.
//
// Binary layout (native endianness): uint64 P, uint64 N, then P doubles
// (psi eigenvalues, ascending) and N doubles (phi eigenvalues, ascending).

#pragma once

#include "resinfo/errors.hpp"
#include "resinfo/oracle/instance.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <string>

namespace resinfo::oracle {

inline void write_eigenvalues_csv(const FiniteInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path);
    out << "# P=" << inst.P << " N=" << inst.N << "\n";
    out << "kind,index,value\n";
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < inst.psi_eigs.size(); ++i) out << "psi," << i << ',' << inst.psi_eigs[i] << '\n';
    for (std::size_t i = 0; i < inst.phi_eigs.size(); ++i) out << "phi," << i << ',' << inst.phi_eigs[i] << '\n';
}

inline void write_eigenvalues_binary(const FiniteInstance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path);
    const std::uint64_t header[2] = {inst.P, inst.N};
    out.write(reinterpret_cast<const char*>(header), sizeof(header));
    out.write(reinterpret_cast<const char*>(inst.psi_eigs.data()),
              static_cast<std::streamsize>(inst.psi_eigs.size() * sizeof(double)));
    out.write(reinterpret_cast<const char*>(inst.phi_eigs.data()),
              static_cast<std::streamsize>(inst.phi_eigs.size() * sizeof(double)));
}

// Spectrum-only instance read back from the binary layout.
inline FiniteInstance read_eigenvalues_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::uint64_t header[2] = {0, 0};
    in.read(reinterpret_cast<char*>(header), sizeof(header));
    FiniteInstance inst;
    inst.P = header[0];
    inst.N = header[1];
    inst.psi_eigs.resize(inst.P);
    inst.phi_eigs.resize(inst.N);
    in.read(reinterpret_cast<char*>(inst.psi_eigs.data()), static_cast<std::streamsize>(inst.P * sizeof(double)));
    in.read(reinterpret_cast<char*>(inst.phi_eigs.data()), static_cast<std::streamsize>(inst.N * sizeof(double)));
    if (!in) throw Error("truncated eigenvalue file " + path);
    return inst;
}

}  // namespace resinfo::oracle
