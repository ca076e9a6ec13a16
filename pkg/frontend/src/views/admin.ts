// Admin view: live agents and the sniffer trace, one line per message.

import { escapeHtml } from "./page";

export function renderAdmin(agents: string[], trace: string): string {
  const agentItems = agents
    .map((guid) => `<li class="agent">${escapeHtml(guid)}</li>`)
    .join("\n");
  const traceLines = trace
    .split("\n")
    .filter((line) => line.length > 0)
    .map((line) => `<code class="trace-line">${escapeHtml(line)}</code>`)
    .join("\n");
  return [
    `<section class="admin">`,
    `<h2>Agents</h2><ul class="agents">`,
    agentItems,
    `</ul>`,
    `<h2>Message trace</h2><pre class="trace">`,
    traceLines,
    `</pre>`,
    `</section>`,
  ].join("\n");
}
