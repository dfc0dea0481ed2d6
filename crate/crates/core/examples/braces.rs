//! Braces, the dot product, the Gerstenhaber bracket and the brace relation on `k[x]/(x²)`.

use embrace::corpus;
use embrace::exact::FieldSpec;
use embrace::graded::koszul_swap_sign;
use embrace::hochschild::{
    brace, brace_plain, dot, gerstenhaber_bracket, hochschild_differential, relation_lhs, relation_rhs, suspend,
};
use embrace::workbench::tasks::format_cochain;

fn main() {
    let e1 = corpus::dual_numbers(FieldSpec::Rational);
    let q = &e1.quiver;
    let phi = corpus::dual_numbers_cocycle(&e1);
    let psi = corpus::dual_numbers_psi(&e1);

    println!("m        = {}", format_cochain(q, &e1.m));
    println!("phi      = {}", format_cochain(q, &phi));
    println!("psi      = {}", format_cochain(q, &psi));
    println!("m{{psi}}   = {}", format_cochain(q, &brace_plain(q, &e1.m, &[&psi])));
    println!("phi . psi = {}", format_cochain(q, &dot(q, &phi, &psi)));
    println!("[m, psi]  = {}", format_cochain(q, &gerstenhaber_bracket(q, &e1.m, &psi)));
    println!("d(psi)    = {}", format_cochain(q, &hochschild_differential(q, &e1.m, &psi)));

    // b{b} = 0 for b = σm, and one instance of the brace relation
    let b = suspend(q, &e1.m);
    println!("b{{b}} is zero: {}", brace(q, &b, &[&b]).is_zero());
    let (x, y) = (suspend(q, &phi), suspend(q, &psi));
    let lhs = relation_lhs(q, &b, &[&x], &[&y], koszul_swap_sign);
    let rhs = relation_rhs(q, &b, &[&x], &[&y], koszul_swap_sign);
    println!("b{{phi}}{{psi}} expands correctly: {}", lhs == rhs);
}
