import { ApiClient } from "./api.js";
import { App } from "./app.js";
import { setLanguage } from "./i18n.js";
import { UsageRecorder } from "./usage.js";

const api = new ApiClient();
const usage = new UsageRecorder(api);

setLanguage("en");
const app = new App(api, usage);
document.getElementById("app")?.append(app.root);
