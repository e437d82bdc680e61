import init, { quotient, random_finite, real_eigen } from "./pkg/idempo_demo.js";

const $ = (id) => document.getElementById(id);

function show(out, json, render) {
  const v = JSON.parse(json);
  out.classList.toggle("error", "error" in v);
  out.textContent = "error" in v ? v.error : render(v);
}

function seed(id) {
  return BigInt(Math.max(0, Math.floor(Number($(id).value) || 0)));
}

function renderQuotient(v) {
  return [
    `modulus ${v.modulus}, dimension ${v.dim}`,
    ...v.table,
    "",
    v.spectrum.summary,
  ].join("\n");
}

function renderFinite(v) {
  return [
    ...v.table,
    "",
    `eigenvalues: {${v.eigenvalues.join(", ")}}`,
    v.spectrum.summary,
  ].join("\n");
}

function renderReal(v) {
  const fmt = (xs) => "[" + xs.map((c) => c.toFixed(6)).join(", ") + "]";
  const lines = [
    `x = ${fmt(v.x)}`,
    `lambda = ${v.lambda.toFixed(6)}`,
    `residual = ${v.residual.toExponential(2)}`,
  ];
  lines.push(v.idempotent ? `idempotent x/lambda = ${fmt(v.idempotent)}` : "lambda = 0: x is an absolute nilpotent");
  return lines.join("\n");
}

await init();

$("q-run").onclick = () =>
  show($("q-out"), quotient($("q-field").value, $("q-modulus").value), renderQuotient);
$("f-run").onclick = () =>
  show($("f-out"), random_finite(Number($("f-p").value), Number($("f-n").value), seed("f-seed")), renderFinite);
$("r-run").onclick = () =>
  show($("r-out"), real_eigen(Number($("r-n").value), seed("r-seed")), renderReal);

$("q-run").click();
