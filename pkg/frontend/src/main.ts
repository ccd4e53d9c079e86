import { createApp } from "./app.js";

const apiBase = new URLSearchParams(window.location.search).get("api") ?? "";
const root = document.getElementById("app");
if (root) {
  createApp(root, apiBase);
}
