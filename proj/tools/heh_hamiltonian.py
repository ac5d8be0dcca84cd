#!/usr/bin/env python3
# Copyright 2026 The ionzne Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the Pauli coefficients in data/hamiltonians/heh+_0.8A.txt (needs pyscf)."""

import argparse

import numpy as np
from pyscf import ao2mo, gto, scf

PAULI = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]]),
    "Y": np.array([[0, -1j], [1j, 0]]),
    "Z": np.diag([1, -1]),
}


def determinant_hamiltonian(bond):
    mol = gto.M(atom=f"He 0 0 0; H 0 0 {bond}", basis="sto-3g", charge=1, spin=0, unit="Angstrom")
    mf = scf.RHF(mol).run(verbose=0)
    c = mf.mo_coeff
    h1 = c.T @ mf.get_hcore() @ c
    eri = ao2mo.restore(1, ao2mo.kernel(mol, c), 2)

    def element(ia, jb, ka, lb):
        # Opposite-spin pair: no exchange term.
        v = 0.0
        if jb == lb:
            v += h1[ia, ka]
        if ia == ka:
            v += h1[jb, lb]
        return v + eri[ia, ka, jb, lb]

    # Qubit value 1 means the electron sits in orbital 0.
    basis = [(q0, q1) for q0 in (0, 1) for q1 in (0, 1)]
    orb = {b: (1 - b[0], 1 - b[1]) for b in basis}
    h = np.array([[element(*orb[a], *orb[b]) for b in basis] for a in basis])
    return h + mol.energy_nuc() * np.eye(4), mf.e_tot


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bond", type=float, default=0.8)
    args = ap.parse_args()
    h, e_hf = determinant_hamiltonian(args.bond)
    print(f"# E_HF {float(e_hf)!r}")
    for a in "IXYZ":
        for b in "IXYZ":
            coeff = np.trace(np.kron(PAULI[a], PAULI[b]) @ h).real / 4
            if abs(coeff) > 1e-12:
                print(a + b, repr(float(coeff)))


if __name__ == "__main__":
    main()
