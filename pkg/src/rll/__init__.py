"""Right-linear lattice expressions over a finite alphabet: parsing and
closure structure (`expr`), ω-word semantics via parity games (`semantics`),
alternating parity automata (`automaton`), the inclusion sequent calculus
(`calculus`), cyclic proof graphs and the progress checker (`proof`), the
inclusion decision procedure (`decide`), bundled fixtures (`corpus`) and the
command-line front end (`cli`)."""

__version__ = "0.1.0"
