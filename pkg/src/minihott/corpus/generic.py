"""Generic pointed-type machinery, instantiated per carrier level.

A pointed type at level i is a pair of a type in U{i} and an element of
it.  The file for level i builds loop spaces and their iterates, pointed
families and their base-change, the pair and function commutation laws
for loop spaces, collapse of contractible and truncated fibers, and the
local-global looping principle for the universe one level down.
"""

from __future__ import annotations

from .build import HottFile

MACHINERY_LEVELS = (1, 2, 3)

GENERALITY = (
    "each declaration is fixed at one universe level; the "
    "level-polymorphic statement is not expressible in this language"
)


def pointed_level(i: int) -> HottFile:
    u = i - 1  # universe whose local-global principle this level carries
    f = HottFile(
        f"generic/{7 + i:02d}-pointed-level{i}.hott",
        pragmas=["requires-ua", "requires-funext", "requires-eta-sigma"],
        header=f"Pointed types with carriers in U{u + 1}: loop spaces, pointed\n"
        "families, commutation of loops with pair and function types,\n"
        "collapse of truncated fibers, and the local-global looping\n"
        f"principle for U{u}.",
        generality=GENERALITY,
    )

    f.d("def", f"pT{i}", f"U{i + 1}", f"(A : U{i}) * A",
        ref="pointed-type")
    f.d("def", f"pF{i}", f"pT{i} -> U{i + 1}",
        f"fun X => (P : fst X -> U{i}) * P (snd X)",
        ref="pointed-family")
    f.d("def", f"pMap{i}", f"pT{i} -> pT{i} -> U{i}",
        "fun X Y => (f : fst X -> fst Y) * Id (fst Y) (f (snd X)) (snd Y)",
        ref="pointed-map")
    f.d("def", f"pEqv{i}", f"pT{i} -> pT{i} -> U{i}",
        f"fun X Y => (m : pMap{i} X Y) * isEquiv{i} (fst X) (fst Y) (fst m)",
        ref="pointed-equivalence")
    f.d("def", f"pOm{i}", f"pT{i} -> pT{i}",
        "fun X => (Id (fst X) (snd X) (snd X), refl (snd X))",
        ref="loop-space")
    f.d("def", f"pOmIter{i}", f"Nat -> pT{i} -> pT{i}",
        f"fun n => natElim (fun m => pT{i} -> pT{i}) (fun X => X)"
        f" (fun m ih => fun X => ih (pOm{i} X)) n",
        comment="Iteration peels from the inside: the successor case loops first\n"
        "and then iterates, so `pOmIter (suc n) X` reduces to\n"
        "`pOmIter n (pOm X)`.",
        ref="iterated-loop-space")
    f.d("def", f"pOmFam{i}",
        f"(X : pT{i}) -> pF{i} X -> pF{i} (pOm{i} X)",
        "fun X P => (fun q => Id (fst P (snd X))"
        " (transport (fst X) (fst P) (snd X) (snd X) q (snd P)) (snd P)"
        ", refl (snd P))",
        ref="loop-space-of-a-family")
    f.d("def", f"pSigma{i}",
        f"(X : pT{i}) -> pF{i} X -> pT{i}",
        "fun X P => ((a : fst X) * fst P a, (snd X, snd P))",
        ref="total-pointed-type")
    f.d("def", f"pPi{i}",
        f"(A : U{i}) -> (A -> pT{i}) -> pT{i}",
        "fun A F => ((a : A) -> fst (F a), fun a => snd (F a))",
        ref="pointed-function-type")
    f.d("def", f"pOmFamIter{i}",
        f"(n : Nat) (X : pT{i}) -> pF{i} X -> pF{i} (pOmIter{i} n X)",
        f"fun n => natElim (fun m => (X : pT{i}) -> pF{i} X -> pF{i} (pOmIter{i} m X))"
        " (fun X P => P)"
        f" (fun m ih => fun X P => ih (pOm{i} X) (pOmFam{i} X P)) n",
        ref="iterated-loop-space-of-a-family")

    # A pointed path moves the source basepoint to the target basepoint:
    # transporting along its carrier path lands on the target's point.
    tr_id = (f"transport U{i} (fun T => T) (fst Y) (fst Z)"
             f" (pathAp pT{i} U{i} (fun W => fst W) Y Z e) (snd Y)")
    tr_fst = f"transport pT{i} (fun W => fst W) Y Z e (snd Y)"
    f.d("def", f"basepointTransfer{i}",
        f"(Y Z : pT{i}) (e : Id pT{i} Y Z)"
        f" -> Id (fst Z) ({tr_id}) (snd Z)",
        f"fun Y Z e => pathComp (fst Z)"
        f" ({tr_id})"
        f" ({tr_fst})"
        " (snd Z)"
        f" (pathInv (fst Z) ({tr_fst}) ({tr_id})"
        f" (transportAlongAp pT{i} U{i} (fun W => fst W) (fun T => T) Y Z e (snd Y)))"
        f" (apDep pT{i} (fun W => fst W) (fun W => snd W) Y Z e)",
        ref="pointed-paths-move-basepoints")

    # Pointed equivalences induce pointed identifications (via univalence
    # on the carrier plus transport computation).
    und = "(fst (fst e), snd e)"
    cp = f"equivToPath{i} (fst X) (fst Y) {und}"
    idto_cp = f"idtoeqv{i} (fst X) (fst Y) ({cp})"
    f.d("def", f"pEqvToId{i}",
        f"(X Y : pT{i}) -> pEqv{i} X Y -> Id pT{i} X Y",
        f"fun X Y e => pairPath U{i} (fun T => T) (fst X) (fst Y)"
        f" ({cp}) (snd X) (snd Y)"
        " (pathComp (fst Y)"
        f" (transport U{i} (fun T => T) (fst X) (fst Y) ({cp}) (snd X))"
        f" (fst ({idto_cp}) (snd X))"
        " (snd Y)"
        f" (transportIdtoeqv{i} (fst X) (fst Y) ({cp}) (snd X))"
        " (pathComp (fst Y)"
        f" (fst ({idto_cp}) (snd X))"
        " (fst (fst e) (snd X))"
        " (snd Y)"
        f" (pathAp (eqv{i} (fst X) (fst Y)) (fst Y) (fun w => fst w (snd X))"
        f" ({idto_cp}) {und}"
        f" (uaEpsilon{i} (fst X) (fst Y) {und}))"
        " (snd (fst e))))",
        ref="pointed-equivalences-give-pointed-paths")

    # Loops commute with pointed pair types.
    split = f"sigmaPathSplit (fst X) (fst P) (snd X, snd P) (snd X, snd P)"
    unsplit = ("fun w => pairPath (fst X) (fst P) (snd X) (snd X)"
               " (fst w) (snd P) (snd P) (snd w)")
    f.d("def", f"omSigmaCommEqv{i}",
        f"(X : pT{i}) (P : pF{i} X) -> pEqv{i} (pOm{i} (pSigma{i} X P))"
        f" (pSigma{i} (pOm{i} X) (pOmFam{i} X P))",
        f"fun X P => (({split}, refl (refl (snd X), refl (snd P)))"
        f", (({unsplit}"
        ", splitThenPair (fst X) (fst P) (snd X, snd P) (snd X, snd P))"
        f", ({unsplit}"
        ", fun w => pairThenSplit (fst X) (fst P) (snd X) (snd X)"
        " (fst w) (snd P) (snd P) (snd w))))",
        ref="loops-commute-with-pairs")
    f.d("def", f"omSigmaCommEq{i}",
        f"(X : pT{i}) (P : pF{i} X) -> Id pT{i} (pOm{i} (pSigma{i} X P))"
        f" (pSigma{i} (pOm{i} X) (pOmFam{i} X P))",
        f"fun X P => pEqvToId{i} (pOm{i} (pSigma{i} X P))"
        f" (pSigma{i} (pOm{i} X) (pOmFam{i} X P)) (omSigmaCommEqv{i} X P)",
        ref="loops-commute-with-pairs")

    # Loops commute with pointed function types.
    f.d("def", f"omPiCommEqv{i}",
        f"(A : U{i}) (F : A -> pT{i}) -> pEqv{i} (pOm{i} (pPi{i} A F))"
        f" (pPi{i} A (fun a => pOm{i} (F a)))",
        "fun A F => ((happly A (fun a => fst (F a))"
        " (fun a => snd (F a)) (fun a => snd (F a))"
        ", refl (fun a => refl (snd (F a))))"
        ", happlyIsEquiv A (fun a => fst (F a))"
        " (fun a => snd (F a)) (fun a => snd (F a)))",
        ref="loops-commute-with-functions")
    f.d("def", f"omPiCommEq{i}",
        f"(A : U{i}) (F : A -> pT{i}) -> Id pT{i} (pOm{i} (pPi{i} A F))"
        f" (pPi{i} A (fun a => pOm{i} (F a)))",
        f"fun A F => pEqvToId{i} (pOm{i} (pPi{i} A F))"
        f" (pPi{i} A (fun a => pOm{i} (F a))) (omPiCommEqv{i} A F)",
        ref="loops-commute-with-functions")

    # Iterated versions, by recursion on the iteration count.
    f.d("def", f"omSigmaIterEq{i}",
        f"(n : Nat) (X : pT{i}) (P : pF{i} X)"
        f" -> Id pT{i} (pOmIter{i} n (pSigma{i} X P))"
        f" (pSigma{i} (pOmIter{i} n X) (pOmFamIter{i} n X P))",
        f"fun n => natElim (fun m => (X : pT{i}) -> (P : pF{i} X) ->"
        f" Id pT{i} (pOmIter{i} m (pSigma{i} X P))"
        f" (pSigma{i} (pOmIter{i} m X) (pOmFamIter{i} m X P)))"
        f" (fun X P => refl (pSigma{i} X P))"
        f" (fun m ih => fun X P => pathComp pT{i}"
        f" (pOmIter{i} m (pOm{i} (pSigma{i} X P)))"
        f" (pOmIter{i} m (pSigma{i} (pOm{i} X) (pOmFam{i} X P)))"
        f" (pSigma{i} (pOmIter{i} m (pOm{i} X))"
        f" (pOmFamIter{i} m (pOm{i} X) (pOmFam{i} X P)))"
        f" (pathAp pT{i} pT{i} (fun Y => pOmIter{i} m Y)"
        f" (pOm{i} (pSigma{i} X P)) (pSigma{i} (pOm{i} X) (pOmFam{i} X P))"
        f" (omSigmaCommEq{i} X P))"
        f" (ih (pOm{i} X) (pOmFam{i} X P))) n",
        ref="iterated-loops-commute-with-pairs")
    f.d("def", f"omPiIterEq{i}",
        f"(n : Nat) (A : U{i}) (F : A -> pT{i})"
        f" -> Id pT{i} (pOmIter{i} n (pPi{i} A F))"
        f" (pPi{i} A (fun a => pOmIter{i} n (F a)))",
        f"fun n => natElim (fun m => (A : U{i}) -> (F : A -> pT{i}) ->"
        f" Id pT{i} (pOmIter{i} m (pPi{i} A F))"
        f" (pPi{i} A (fun a => pOmIter{i} m (F a))))"
        f" (fun A F => refl (pPi{i} A F))"
        f" (fun m ih => fun A F => pathComp pT{i}"
        f" (pOmIter{i} m (pOm{i} (pPi{i} A F)))"
        f" (pOmIter{i} m (pPi{i} A (fun a => pOm{i} (F a))))"
        f" (pPi{i} A (fun a => pOmIter{i} m (pOm{i} (F a))))"
        f" (pathAp pT{i} pT{i} (fun Y => pOmIter{i} m Y)"
        f" (pOm{i} (pPi{i} A F)) (pPi{i} A (fun a => pOm{i} (F a)))"
        f" (omPiCommEq{i} A F))"
        f" (ih A (fun a => pOm{i} (F a)))) n",
        ref="iterated-loops-commute-with-functions")

    # Contractible fibers can be forgotten outright; n-truncated fibers
    # can be forgotten after n loops.  The contractible case is the base
    # of the recursion, applied literally.
    f.d("def", f"contrFiberCollapse{i}",
        f"(X : pT{i}) (P : pF{i} X) -> ((a : fst X) -> isTrunc 0 (fst P a))"
        f" -> Id pT{i} (pSigma{i} X P) X",
        f"fun X P h => pEqvToId{i} (pSigma{i} X P) X"
        " ((fun w => fst w, refl (snd X))"
        ", ((fun a => (a, fst (h a))"
        ", fun w => pairPath (fst X) (fst P) (fst w) (fst w) (refl (fst w))"
        " (fst (h (fst w))) (snd w)"
        " (contrPath (fst P (fst w)) (h (fst w)) (fst (h (fst w))) (snd w)))"
        ", (fun a => (a, fst (h a)), fun a => refl a)))",
        ref="contractible-fibers-collapse")
    f.d("def", f"forgetLoops{i}",
        f"(n : Nat) (X : pT{i}) (P : pF{i} X)"
        " -> ((a : fst X) -> isTrunc n (fst P a))"
        f" -> Id pT{i} (pOmIter{i} n (pSigma{i} X P)) (pOmIter{i} n X)",
        f"fun n => natElim (fun m => (X : pT{i}) -> (P : pF{i} X) ->"
        " ((a : fst X) -> isTrunc m (fst P a)) ->"
        f" Id pT{i} (pOmIter{i} m (pSigma{i} X P)) (pOmIter{i} m X))"
        f" (fun X P h => contrFiberCollapse{i} X P h)"
        f" (fun m ih => fun X P h => pathComp pT{i}"
        f" (pOmIter{i} m (pOm{i} (pSigma{i} X P)))"
        f" (pOmIter{i} m (pSigma{i} (pOm{i} X) (pOmFam{i} X P)))"
        f" (pOmIter{i} m (pOm{i} X))"
        f" (pathAp pT{i} pT{i} (fun Y => pOmIter{i} m Y)"
        f" (pOm{i} (pSigma{i} X P)) (pSigma{i} (pOm{i} X) (pOmFam{i} X P))"
        f" (omSigmaCommEq{i} X P))"
        f" (ih (pOm{i} X) (pOmFam{i} X P)"
        " (fun q => h (snd X)"
        " (transport (fst X) (fst P) (snd X) (snd X) q (snd P)) (snd P)))) n",
        comment="The truncation hypothesis for the looped family is the original\n"
        "hypothesis at the basepoint, specialized to paths; the shift is\n"
        "definitional.",
        ref="truncated-fibers-collapse-after-looping")

    # Local-global looping for the universe one level down: loops of
    # loops in the universe at a type are pointwise loops in the type.
    f.d("def", f"uaPointed{u}",
        f"(A : U{u}) -> Id pT{i} (Id U{u} A A, refl A) (eqv{u} A A, idEqv{u} A)",
        f"fun A => pEqvToId{i} (Id U{u} A A, refl A) (eqv{u} A A, idEqv{u} A)"
        f" ((idtoeqv{u} A A, refl (idEqv{u} A)), univalence{u} A A)",
        ref="pointed-univalence")
    f.d("def", f"localGlobal{u}",
        f"(n : Nat) (A : U{u})"
        f" -> Id pT{i} (pOmIter{i} (suc (suc n)) (U{u}, A))"
        f" (pPi{i} A (fun a => pOmIter{i} (suc n) (A, a)))",
        f"fun n A => pathComp pT{i}"
        f" (pOmIter{i} (suc (suc n)) (U{u}, A))"
        f" (pOmIter{i} (suc n) (eqv{u} A A, idEqv{u} A))"
        f" (pPi{i} A (fun a => pOmIter{i} (suc n) (A, a)))"
        f" (pathAp pT{i} pT{i} (fun Y => pOmIter{i} (suc n) Y)"
        f" (Id U{u} A A, refl A) (eqv{u} A A, idEqv{u} A) (uaPointed{u} A))"
        f" (pathComp pT{i}"
        f" (pOmIter{i} (suc n) (eqv{u} A A, idEqv{u} A))"
        f" (pOmIter{i} (suc n) (A -> A, fun x => x))"
        f" (pPi{i} A (fun a => pOmIter{i} (suc n) (A, a)))"
        f" (forgetLoops{i} (suc n) (A -> A, fun x => x)"
        f" (fun f => isEquiv{u} A A f, snd (idEqv{u} A))"
        f" (fun f => truncRaiseFrom1 n (isEquiv{u} A A f) (propIsEquiv{u} A A f)))"
        f" (omPiIterEq{i} (suc n) A (fun a => (A, a))))",
        comment="After one loop the basepoint becomes the identity loop, which by\n"
        "pointed univalence is the pointed type of self-equivalences; its\n"
        "equivalence-witness fibers are propositional and collapse under\n"
        "the remaining loops, leaving pointwise loops in the type itself.",
        ref="loops-in-the-universe-are-pointwise-loops")
    return f


def emit_generic(levels: tuple[int, ...] = MACHINERY_LEVELS) -> list[HottFile]:
    return [pointed_level(i) for i in levels]
