import { ApiClient } from "./api.js";
import { Lang, LANGS, MessageKey } from "./catalog.js";
import { applyTranslations, labeledField, language, setLanguage, translated } from "./i18n.js";
import { renderCareersTab } from "./tabs/careers.js";
import { renderFaqTab } from "./tabs/faq.js";
import { renderLocatorTab } from "./tabs/locator.js";
import { renderMindfulnessTab } from "./tabs/mindfulness.js";
import { renderResumeTab, Downloader } from "./tabs/resume.js";
import { renderTranslatorTab } from "./tabs/translator.js";
import { UsageRecorder } from "./usage.js";
import { ChatWidget } from "./widgets/chat.js";

export interface TabSpec {
  slug: string;
  labelKey: MessageKey;
  render: (api: ApiClient, usage: UsageRecorder) => HTMLElement;
}

export const TABS: TabSpec[] = [
  { slug: "resume", labelKey: "tab.resume", render: renderResumeTab },
  { slug: "career-services", labelKey: "tab.career", render: renderCareersTab },
  { slug: "mindfulness", labelKey: "tab.mindfulness", render: renderMindfulnessTab },
  { slug: "translator", labelKey: "tab.translator", render: renderTranslatorTab },
  { slug: "common-questions", labelKey: "tab.faq", render: renderFaqTab },
  { slug: "locator", labelKey: "tab.locator", render: renderLocatorTab },
];

export class App {
  readonly root: HTMLElement;
  readonly chat: ChatWidget;
  private content: HTMLElement;
  private tabButtons = new Map<string, HTMLButtonElement>();
  private activeTab = "";

  constructor(
    private api: ApiClient,
    private usage: UsageRecorder,
    private download?: Downloader,
  ) {
    this.root = document.createElement("div");
    this.root.className = "app";

    const header = document.createElement("header");
    header.append(translated("h1", "app.title"));
    header.append(this.languageSelector());
    this.root.append(header);

    const nav = document.createElement("nav");
    nav.className = "tab-bar";
    for (const tab of TABS) {
      const button = translated("button", tab.labelKey);
      button.dataset.tab = tab.slug;
      button.addEventListener("click", () => this.openTab(tab.slug));
      this.tabButtons.set(tab.slug, button);
      nav.append(button);
    }
    this.root.append(nav);

    const main = document.createElement("main");
    this.content = document.createElement("div");
    this.content.className = "tab-content";
    this.chat = new ChatWidget(this.api, this.usage);
    main.append(this.content, this.chat.root);
    this.root.append(main);

    this.openTab(TABS[0].slug);
  }

  private languageSelector(): HTMLElement {
    const select = document.createElement("select");
    select.dataset.testid = "language-select";
    for (const lang of LANGS) {
      const option = document.createElement("option");
      option.value = lang;
      option.textContent = lang;
      select.append(option);
    }
    select.value = language();
    select.addEventListener("change", () => {
      this.switchLanguage(select.value as Lang);
    });
    return labeledField("language.label", select);
  }

  switchLanguage(lang: Lang): void {
    setLanguage(lang);
    this.api.lang = lang;
    this.usage.emit("button_clicked", "language-switch");
    applyTranslations(this.root);
    this.renderActive(); // localized content is re-requested in the new language
  }

  openTab(slug: string): void {
    if (slug === this.activeTab) {
      return;
    }
    this.activeTab = slug;
    for (const [tabSlug, button] of this.tabButtons) {
      button.classList.toggle("active", tabSlug === slug);
    }
    this.usage.emit("tab_opened", slug);
    this.renderActive();
  }

  get currentTab(): string {
    return this.activeTab;
  }

  private renderActive(): void {
    const tab = TABS.find((candidate) => candidate.slug === this.activeTab);
    if (!tab) {
      return;
    }
    const rendered = tab.slug === "resume" && this.download
      ? renderResumeTab(this.api, this.usage, this.download)
      : tab.render(this.api, this.usage);
    this.content.replaceChildren(rendered);
  }
}
